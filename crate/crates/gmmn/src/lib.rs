pub mod center;
pub mod chebyshev;
pub mod exactnum;
pub mod fourier;
pub mod fusion;
pub mod graphs;
pub mod koornwinder;
pub mod nhedral;
mod par;
pub mod weights;
