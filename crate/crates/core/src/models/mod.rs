//! Closed-form model Hamiltonians.

mod coulomb;
mod morse;
mod rosen_morse;

pub use coulomb::{coulomb_basis, coulomb_bound_states, coulomb_jmatrix, coulomb_wavefunction, BoundState, CoulombImaginaryCharge};
pub use morse::{
    morse_basis, morse_cd, morse_operator, morse_partner_closed, morse_pn, morse_potential, partner_shift_resolution, MorseFamily,
    MorseParams, ShiftResolution,
};
pub use rosen_morse::{rm2_basis, rm2_basis_with_exponents, rm2_energy, rm2_potential, ExponentPair, RosenMorseII};
