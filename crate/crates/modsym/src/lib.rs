//! Exact and numerical machinery for modular cocycles at level 1.
//!
//! The crate is organised around these subsystems:
//!
//! - [`psl2z`]: words and matrices in PSL(2,Z), cusps, continued-fraction
//!   convergents, stabilizers, and the reduction to canonical words.
//! - [`ncalg`]: truncated noncommutative power series, letter substitutions,
//!   shuffle and coproduct group-likeness tests.
//! - [`nccoh`]: noncommutative 1-cocycles on PSL(2,Z) over an abstract
//!   coefficient group, normalization, cuspidality, coset induction.
//! - [`forms`]: level-1 cusp forms with exact q-expansions, weight actions,
//!   polynomial-twisted densities and their pullback matrices.
//! - [`integrate`]: iterated path integrals of densities as series-valued
//!   transports between points of the completed upper half plane.
//! - [`periods`]: the transport cocycle's generator values, the full period
//!   series, and the convergent-chain decomposition of cusp transports.
//! - [`mellin`]: completed L-values by quadrature and by Dirichlet series,
//!   functional equations, iterated and series-valued Mellin transforms.
//! - [`msymb`]: classical weight-k modular symbols over exact rationals,
//!   boundary maps and the integration pairing against cusp forms.
//! - [`suites`]: the named verification suites behind the `modsym` binary,
//!   configured through [`config`].
//!
//! Support modules: [`linalg`] (exact row reduction), [`quad`] (panelled
//! Gauss–Legendre rules), [`ratmat`] (2x2 rational matrices), [`tol`]
//! (pinned tolerances).
//!
//! The `examples/` directory is the guided tour; each example is runnable as
//! `cargo run --release --example <name>` and exercises one capability
//! end to end. The thin `modsym` binary drives the same library code through
//! `verify` and `compute` subcommands.

pub mod config;
pub mod forms;
pub mod integrate;
pub mod linalg;
pub mod mellin;
pub mod msymb;
pub mod ncalg;
pub mod nccoh;
pub mod periods;
pub mod psl2z;
pub mod quad;
pub mod ratmat;
pub mod suites;
pub mod tol;
