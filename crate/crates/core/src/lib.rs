pub mod dd;
pub mod fivp;
pub mod inverse;
pub mod mlf;
pub mod potential;
pub mod quad;
pub mod spectrum;
