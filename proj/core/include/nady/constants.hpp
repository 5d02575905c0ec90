#pragma once

// Gaussian atomic units: hbar = e = m_e = 1, lengths in Bohr radii,
// energies in Hartree. The speed of light carries the magnetic couplings.
namespace nady::constants {

inline constexpr double c = 137.035999084;  // 1/alpha
inline constexpr double hbar = 1.0;
inline constexpr double e_charge = 1.0;
inline constexpr double m_electron = 1.0;

// Relative residual allowed on sum(m_i rho_i) and sum(m_i rhodot_i).
inline constexpr double constraint_tol = 1e-10;

// Pairwise separations at or below this abort the run instead of softening
// the Coulomb singularity.
inline constexpr double min_separation = 1e-6;

}  // namespace nady::constants
