pub mod algebra;
pub mod coeffs;
pub mod elements;
pub mod par;
pub mod text;
pub mod verify;
