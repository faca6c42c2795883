//! Pinned numerical tolerances.
//!
//! Every residual threshold used by the verification suites and the
//! acceptance tests lives here, so the bar cannot drift silently. Exact
//! rational paths use equality and never consult these.

/// Residual bound for purely algebraic floating-point identities: series
/// arithmetic round trips, coproduct vs shuffle agreement, letter-map
/// composition in floats.
pub const ALGEBRAIC: f64 = 1e-12;

/// Group-likeness (shuffle) residual for quadrature-produced transports.
pub const GROUPLIKE: f64 = 1e-8;

/// Residual bound for quadrature-backed cocycle checks: generator
/// relations, cocycle identity on sampled pairs, base-point equivalence,
/// cuspidality witnesses. Law defects are backward residuals, scaled by
/// operand magnitudes and the amplification of the letter substitutions
/// involved, since that is the scale at which floats can certify them.
pub const COCYCLE: f64 = 1e-6;

/// Backward residual for the convergent-chain decomposition of a cusp
/// transport: |a-b| over the substitution amplification of the period
/// series. A convergent substitution scales depth `d` coefficients by
/// up to its row sum to the `d`-th power, which sets the certifiable
/// magnitude even when cancellation keeps the output small.
pub const CF_DECOMP: f64 = 1e-6;

/// Depth-1 transport coefficients against independently computed completed
/// L-values.
pub const DEPTH1_CROSS: f64 = 1e-10;

/// Relative agreement between the quadrature and Dirichlet-series routes to
/// a completed L-value, and for its functional equation.
pub const MELLIN: f64 = 1e-8;

/// Agreement between two independent path splittings of the same completed
/// L-value (entirety proxy).
pub const LAMBDA_SPLIT: f64 = 1e-9;

/// Residual for the series-valued Mellin functional equation and its
/// coincidence with the sigma generator relation.
pub const TOTAL_MELLIN: f64 = 1e-6;
pub const TM_COINCIDENCE: f64 = 1e-8;

/// Relative residual below which a graded linear system is declared
/// solvable when searching for a cuspidality witness.
pub const CUSPIDAL_SOLVE: f64 = 1e-6;

/// Smallest/largest singular value ratio certifying rank 2 of the
/// integration pairing matrix.
pub const PAIRING_RANK: f64 = 1e-4;

/// Relative accuracy of the complex gamma function on the tested domain.
pub const GAMMA: f64 = 1e-12;

/// Two floating series coefficients are "the same point" below this; used
/// to detect zero-length paths.
pub const POINT_EQ: f64 = 1e-12;
