//! Run configuration: a documented, serializable schema covering the
//! alphabet, truncation depth, quadrature settings, tolerances, base
//! point, and sampling seed.
//!
//! A configuration resolves to working objects in two steps: `validate`
//! checks every numeric constraint and that the alphabet closes under the
//! generator substitutions, then `build_basis` and `transport_config`
//! hand the validated pieces to the integration machinery. Reports echo
//! the resolved configuration so a run can be reproduced from its output
//! alone. The seed only ever feeds random word sampling; quadrature is
//! deterministic.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::forms::{CuspForm, DensityBasis};
use crate::integrate::TransportConfig;
use crate::psl2z::{Cusp, ExtendedPoint};
use crate::tol;

/// Environment variable holding the default configuration file path.
pub const CONFIG_ENV: &str = "MODSYM_CONFIG";

/// One form in the alphabet, by registered name, with its q-expansion
/// truncation and the exponent seeds that generate its letters.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    /// Registered name: `delta` (weight 12) or `delta_e4` (weight 16).
    pub name: String,
    /// Number of q-expansion coefficients to carry.
    #[serde(default = "default_terms")]
    pub terms: usize,
    /// Seed exponents m (densities `f(z) z^(m-1) dz`); empty takes the
    /// whole strip 1..weight. The alphabet is the closure of the seeds
    /// under the generator substitutions.
    #[serde(default)]
    pub seed_exponents: Vec<u32>,
}

fn default_terms() -> usize {
    1200
}

/// Quadrature controls, mapped onto the transport machinery.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadratureConfig {
    /// Gauss-Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Target arc length per panel.
    pub target_panel_len: f64,
    /// Minimum panels per path segment.
    pub min_panels: usize,
    /// Height where vertical tails to infinity are cut.
    pub tail_height: f64,
    /// Pointwise evaluation tolerance requested from the forms.
    pub eval_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        let t = TransportConfig::default();
        QuadratureConfig {
            nodes_per_panel: t.nodes_per_panel,
            target_panel_len: t.target_panel_len,
            min_panels: t.min_panels,
            tail_height: t.tail_height,
            eval_tol: t.eval_tol,
        }
    }
}

/// Tolerances used by the verification suites. Every field must be
/// positive.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ToleranceConfig {
    /// Cocycle law and generator relation residuals.
    pub cocycle: f64,
    /// Shuffle (group-like) deviation of transport series.
    pub grouplike: f64,
    /// Continued-fraction decomposition residual.
    pub cf_decomp: f64,
    /// Quadrature vs Dirichlet-series agreement and functional equation
    /// residuals for completed transforms.
    pub mellin: f64,
    /// Functional equation of the series-valued transform.
    pub total_mellin: f64,
    /// Gap between the series-valued functional equation and the
    /// order-two cocycle relation at integer arguments.
    pub tm_coincidence: f64,
    /// Layer solvability in the cusp witness systems.
    pub cuspidal_solve: f64,
    /// Smallest-to-largest singular value ratio certifying a
    /// nondegenerate pairing matrix.
    pub pairing_rank: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            cocycle: tol::COCYCLE,
            grouplike: tol::GROUPLIKE,
            cf_decomp: tol::CF_DECOMP,
            mellin: tol::MELLIN,
            total_mellin: tol::TOTAL_MELLIN,
            tm_coincidence: tol::TM_COINCIDENCE,
            cuspidal_solve: tol::CUSPIDAL_SOLVE,
            pairing_rank: tol::PAIRING_RANK,
        }
    }
}

impl ToleranceConfig {
    fn all(&self) -> [(&'static str, f64); 8] {
        [
            ("cocycle", self.cocycle),
            ("grouplike", self.grouplike),
            ("cf_decomp", self.cf_decomp),
            ("mellin", self.mellin),
            ("total_mellin", self.total_mellin),
            ("tm_coincidence", self.tm_coincidence),
            ("cuspidal_solve", self.cuspidal_solve),
            ("pairing_rank", self.pairing_rank),
        ]
    }
}

/// The full run configuration. All fields have defaults, so `{}` is a
/// valid configuration file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    /// Alphabet: forms with their exponent seeds.
    pub forms: Vec<FormSpec>,
    /// Truncation depth of every computed series.
    pub depth: usize,
    pub quadrature: QuadratureConfig,
    pub tolerances: ToleranceConfig,
    /// Base point for cocycles: `i`, `rho`, `oo`, or a rational cusp.
    pub base_point: String,
    /// Seed for random word and pair sampling only.
    pub seed: u64,
    /// Weights examined by the symbol suite.
    pub symbol_weights: Vec<u32>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            forms: vec![FormSpec {
                name: "delta".into(),
                terms: default_terms(),
                seed_exponents: Vec::new(),
            }],
            depth: 2,
            quadrature: QuadratureConfig::default(),
            tolerances: ToleranceConfig::default(),
            base_point: "i".into(),
            seed: 7,
            symbol_weights: vec![10, 12, 14, 16, 18, 20, 22],
        }
    }
}

impl RunConfig {
    /// Read a configuration from a JSON file.
    pub fn from_file(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Resolve the configuration source: an explicit path wins, else the
    /// environment variable, else defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self, String> {
        if let Some(p) = explicit {
            return RunConfig::from_file(p);
        }
        if let Ok(p) = std::env::var(CONFIG_ENV) {
            return RunConfig::from_file(Path::new(&p));
        }
        Ok(RunConfig::default())
    }

    /// Check every constraint that later stages rely on.
    pub fn validate(&self) -> Result<(), String> {
        if self.forms.is_empty() {
            return Err("at least one form is required".into());
        }
        for spec in &self.forms {
            lookup_weight(&spec.name)?;
            if spec.terms < 8 {
                return Err(format!("form {}: terms must be at least 8", spec.name));
            }
            let weight = lookup_weight(&spec.name)?;
            for &m in &spec.seed_exponents {
                if m < 1 || m >= weight {
                    return Err(format!(
                        "form {}: exponent {m} outside 1..{weight}",
                        spec.name
                    ));
                }
            }
        }
        if self.depth == 0 || self.depth > 4 {
            return Err("depth must be between 1 and 4".into());
        }
        let q = &self.quadrature;
        if q.nodes_per_panel < 2 || q.nodes_per_panel > 64 {
            return Err("nodes_per_panel must be between 2 and 64".into());
        }
        for (name, v) in [
            ("target_panel_len", q.target_panel_len),
            ("tail_height", q.tail_height),
            ("eval_tol", q.eval_tol),
        ] {
            if !(v > 0.0) {
                return Err(format!("{name} must be positive"));
            }
        }
        if q.min_panels == 0 {
            return Err("min_panels must be positive".into());
        }
        for (name, v) in self.tolerances.all() {
            if !(v > 0.0) {
                return Err(format!("tolerance {name} must be positive"));
            }
        }
        self.base()?;
        for &k in &self.symbol_weights {
            if k < 4 || k % 2 != 0 {
                return Err(format!("symbol weight {k} must be even and at least 4"));
            }
        }
        Ok(())
    }

    /// Build the density alphabet: the closure of the configured seeds
    /// under the generator substitutions. With empty seeds the full
    /// strip of every form is taken directly.
    pub fn build_basis(&self) -> Result<DensityBasis, String> {
        let forms: Vec<CuspForm> = self
            .forms
            .iter()
            .map(|spec| build_form(&spec.name, spec.terms))
            .collect::<Result<_, _>>()?;
        if self.forms.iter().all(|s| s.seed_exponents.is_empty()) {
            return Ok(DensityBasis::full(forms));
        }
        let mut seeds = Vec::new();
        for (fi, spec) in self.forms.iter().enumerate() {
            if spec.seed_exponents.is_empty() {
                let weight = forms[fi].weight();
                seeds.extend((1..weight).map(|m| (fi, m)));
            } else {
                seeds.extend(spec.seed_exponents.iter().map(|&m| (fi, m)));
            }
        }
        Ok(DensityBasis::closure(forms, &seeds))
    }

    /// The quadrature settings at this configuration's depth.
    pub fn transport_config(&self) -> TransportConfig {
        TransportConfig {
            depth: self.depth,
            nodes_per_panel: self.quadrature.nodes_per_panel,
            target_panel_len: self.quadrature.target_panel_len,
            min_panels: self.quadrature.min_panels,
            tail_height: self.quadrature.tail_height,
            eval_tol: self.quadrature.eval_tol,
        }
    }

    /// The configured base point.
    pub fn base(&self) -> Result<ExtendedPoint, String> {
        parse_point(&self.base_point)
    }
}

/// Build a registered form by name.
pub fn build_form(name: &str, terms: usize) -> Result<CuspForm, String> {
    match name {
        "delta" => Ok(CuspForm::weight12(terms)),
        "delta_e4" => Ok(CuspForm::weight16(terms)),
        other => Err(format!("unknown form {other:?}; registered: delta, delta_e4")),
    }
}

fn lookup_weight(name: &str) -> Result<u32, String> {
    match name {
        "delta" => Ok(12),
        "delta_e4" => Ok(16),
        other => Err(format!("unknown form {other:?}; registered: delta, delta_e4")),
    }
}

/// Parse a point of the bordered upper half plane: `i`, `rho`, `oo`
/// (also `inf`/`infinity`), or a rational cusp like `2/3`.
pub fn parse_point(text: &str) -> Result<ExtendedPoint, String> {
    match text.trim() {
        "i" => Ok(ExtendedPoint::i()),
        "rho" => Ok(ExtendedPoint::rho()),
        "oo" | "inf" | "infinity" => Ok(ExtendedPoint::infinity()),
        other => Cusp::parse(other)
            .map(ExtendedPoint::Cusp)
            .map_err(|e| format!("cannot parse point {other:?}: {e}")),
    }
}
