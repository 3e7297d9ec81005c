//! Exact integration over [-pi/2, pi/2] in Q[x] tensor Fourier, and the
//! tangent-polynomial route for internal angles with odd alpha and even n.

mod external;
mod fourier;
mod tan;

pub use external::{external_bi, external_bi_tilde, external_lb, external_lb_tilde};
pub use fourier::{
    cos_power_fourier, fourier_antiderivative, integrate_power_with_constant, integrate_symmetric,
    FourierPoly, Kind,
};
pub use tan::{bj_exact_case_iii, inner_tan_antiderivative, TanPoly};
