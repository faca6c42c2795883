//! Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
//!
//! Every tolerance is pinned as a literal in the criterion that uses it, so
//! this file is the contract; run with `--nocapture` to see the lines as
//! they print. Criteria share the expensive depth-three transports through
//! lazily initialised statics, but each judges an independent property.

use std::panic::catch_unwind;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_rational::BigRational;

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::mellin;
use modsym::msymb::{dim_cusp_forms, PeriodPairing, PolySym, SymbolSpace};
use modsym::ncalg::{grouplike_defect_coproduct, grouplike_defect_shuffle, LetterMap, TruncSeries};
use modsym::nccoh::{
    cuspidal_witness, cuspidal_witness_exact, shapiro_induce, transport_cocycle, Cocycle,
    CosetSystem, InducedGroup, SeriesGroup, ValueGroup,
};
use modsym::periods::{cf_residual, period_series};
use modsym::psl2z::{
    normal_form, words_up_to, Cusp, ExtendedPoint, GroupElement, GroupWord, Mat2,
};

type Pair = (TruncSeries<Complex64>, TruncSeries<Complex64>);

/// Eleven-letter density basis generated by closing two seed layers of the
/// weight-12 form, used by every depth-three criterion.
fn deep_basis() -> &'static DensityBasis {
    static BASIS: OnceLock<DensityBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let basis = DensityBasis::closure(vec![CuspForm::weight12(1200)], &[(0, 1), (0, 11)]);
        assert_eq!(basis.len(), 11, "two seed layers must close to the full strip");
        basis
    })
}

/// Depth-three generator transports at the three reference base points.
fn deep_generator_values() -> &'static [(&'static str, ExtendedPoint, Pair); 3] {
    static VALUES: OnceLock<[(&'static str, ExtendedPoint, Pair); 3]> = OnceLock::new();
    VALUES.get_or_init(|| {
        let basis = deep_basis();
        let tr = Transporter::new(basis, TransportConfig { depth: 3, ..Default::default() });
        let group: SeriesGroup<Complex64> = SeriesGroup::new(basis, 3);
        [("oo", ExtendedPoint::infinity()), ("i", ExtendedPoint::i()), ("rho", ExtendedPoint::rho())]
            .map(|(label, base)| {
                let u = transport_cocycle(&tr, &group, &base);
                let pair = (u.on_sigma().clone(), u.on_tau().clone());
                (label, base, pair)
            })
    })
}

fn deep_cocycle_at<'g>(
    group: &'g SeriesGroup<Complex64>,
    label: &str,
) -> Cocycle<'g, SeriesGroup<Complex64>> {
    let (_, _, (s, t)) = deep_generator_values()
        .iter()
        .find(|(l, _, _)| *l == label)
        .expect("known base label");
    Cocycle::new(group, s.clone(), t.clone())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn check(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

// -- criterion 1 ------------------------------------------------------------

/// Word reduction is sound on every unimodular matrix with entries in
/// [-20, 20] (about seven thousand of them; at least two thousand checked
/// even under sampling) and injective on reduced words up to length six.
fn c01_normal_forms() -> Result<(), String> {
    let mut mats = Vec::new();
    for a in -20i64..=20 {
        for b in -20i64..=20 {
            for c in -20i64..=20 {
                if a == 0 {
                    if b * c == -1 {
                        for d in -20..=20 {
                            mats.push((a, b, c, d));
                        }
                    }
                } else {
                    let num = 1 + b * c;
                    if num % a == 0 {
                        let d = num / a;
                        if d.abs() <= 20 {
                            mats.push((a, b, c, d));
                        }
                    }
                }
            }
        }
    }
    check(mats.len() >= 2000, format!("only {} unimodular matrices found", mats.len()))?;
    for &(a, b, c, d) in &mats {
        let m = Mat2::new_i64(a, b, c, d).map_err(|e| format!("({a},{b},{c},{d}): {e}"))?;
        let w = normal_form(&m);
        check(
            w.eval() == m,
            format!("normal form of ({a},{b},{c},{d}) evaluates elsewhere"),
        )?;
    }

    // Syllables alternate between the involution and one of two rotation
    // powers, so the counts by exact length are 1, 2, 3, 4, 5, 7, 9 and the
    // enumeration up to length six must hold 31 words.
    let words = words_up_to(6);
    check(words.len() == 31, format!("expected 31 reduced words, found {}", words.len()))?;
    for w in &words {
        let again = normal_form(&w.eval());
        check(again == *w, format!("words {w:?} and {again:?} share a matrix"))?;
    }
    Ok(())
}

// -- criterion 2 ------------------------------------------------------------

/// The depth-three transport values satisfy both generator relations at
/// each of the three reference base points.
fn c02_generator_relations() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let group: SeriesGroup<Complex64> = SeriesGroup::new(deep_basis(), 3);
    for (label, _, _) in deep_generator_values() {
        let u = deep_cocycle_at(&group, label);
        let r = u.relations_residual();
        check(r < TOL, format!("relations at base {label} leave residual {r:.3e}"))?;
    }
    Ok(())
}

// -- criterion 3 ------------------------------------------------------------

/// The cocycle law holds on twenty fixed word pairs of length up to six,
/// and holds exactly for a synthetic rational coboundary.
fn c03_cocycle_law() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let group: SeriesGroup<Complex64> = SeriesGroup::new(deep_basis(), 3);
    let u = deep_cocycle_at(&group, "i");
    let pairs = fixed_pairs();
    let r = u.cocycle_residual(&pairs);
    check(r < TOL, format!("law residual {r:.3e} on {} pairs", pairs.len()))?;

    let exact_group: SeriesGroup<BigRational> = SeriesGroup::new(deep_basis(), 2);
    let n = exact_group.n_letters();
    let mut prim = TruncSeries::<BigRational>::zero(n, 2);
    prim.block_mut(1)[0] = rat(2, 7);
    prim.block_mut(1)[n - 1] = rat(-1, 3);
    let b = prim.exp();
    let bi = exact_group.inv(&b);
    let s = GroupElement::sigma();
    let t = GroupElement::tau();
    let ue = Cocycle::new(
        &exact_group,
        exact_group.mul(&bi, &exact_group.act(&s, &b)),
        exact_group.mul(&bi, &exact_group.act(&t, &b)),
    );
    let exact = ue.relations_residual().max(ue.cocycle_residual(&pairs));
    check(exact == 0.0, format!("synthetic coboundary leaves residual {exact:.3e}"))
}

/// Twenty deterministic word pairs of length at most six: all pairings of
/// five reduced words with four others.
fn fixed_pairs() -> Vec<(GroupWord, GroupWord)> {
    let left = ["s", "t", "ts", "stt", "tstts"];
    let right = ["tt", "st", "tst", "sttstt"];
    let mut pairs = Vec::new();
    for l in left {
        for r in right {
            pairs.push((GroupWord::parse(l).unwrap(), GroupWord::parse(r).unwrap()));
        }
    }
    pairs
}

// -- criterion 4 ------------------------------------------------------------

/// Transport values are group-like at depth three: shuffle products and
/// the deconcatenation coproduct agree with coefficient products.
fn c04_grouplike() -> Result<(), String> {
    const TOL: f64 = 1e-8;
    let group: SeriesGroup<Complex64> = SeriesGroup::new(deep_basis(), 3);
    let u = deep_cocycle_at(&group, "i");
    let extra = u.value(&GroupWord::parse("tst").unwrap());
    for (what, v) in [("sigma", u.on_sigma()), ("tau", u.on_tau()), ("tst", &extra)] {
        let d = grouplike_defect_shuffle(v).max(grouplike_defect_coproduct(v));
        check(d < TOL, format!("value on {what} has character defect {d:.3e}"))?;
    }
    Ok(())
}

// -- criterion 5 ------------------------------------------------------------

/// Changing the base point twists the cocycle by the connecting transport:
/// at depth two the three reference base points give equivalent cocycles.
fn c05_base_point_independence() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let basis = deep_basis();
    let group: SeriesGroup<Complex64> = SeriesGroup::new(basis, 2);
    let tr = Transporter::new(basis, TransportConfig { depth: 2, ..Default::default() });
    let points =
        [("i", ExtendedPoint::i()), ("rho", ExtendedPoint::rho()), ("oo", ExtendedPoint::infinity())];
    let w = GroupWord::parse("stts").unwrap();
    for (la, a) in &points {
        for (lb, b) in &points {
            if la == lb {
                continue;
            }
            let ua = transport_cocycle(&tr, &group, a);
            let ub = transport_cocycle(&tr, &group, b);
            let twisted = ua.twist(&tr.transport(b, a));
            let gap = group
                .dist(ub.on_sigma(), twisted.on_sigma())
                .max(group.dist(ub.on_tau(), twisted.on_tau()))
                .max(group.dist(&ub.value(&w), &twisted.value(&w)));
            check(gap < TOL, format!("bases {la} and {lb} disagree by {gap:.3e}"))?;
        }
    }
    Ok(())
}

// -- criterion 6 ------------------------------------------------------------

/// The depth-three value on the unit translation admits a cuspidality
/// witness, and an exactly obstructed depth-one system is rejected.
fn c06_cuspidality() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let group: SeriesGroup<Complex64> = SeriesGroup::new(deep_basis(), 3);
    let u = deep_cocycle_at(&group, "i");
    let w = GroupWord::parse("tts").unwrap();
    let r = u.value(&w);
    let m = group.letter_map(&GroupElement::from_word(w));
    let rep = cuspidal_witness(&r, &m);
    for (d, res) in rep.layer_residuals.iter().enumerate() {
        check(*res < TOL, format!("witness layer {} residual {res:.3e}", d + 1))?;
    }
    check(
        rep.fixed_point_residual < TOL,
        format!("witness misses the fixed point by {:.3e}", rep.fixed_point_residual),
    )?;

    let toy = LetterMap::from_cols(vec![vec![rat(1, 1), rat(0, 1)], vec![rat(-1, 1), rat(-1, 1)]]);
    let mut obstructed = TruncSeries::<BigRational>::one(2, 1);
    obstructed.block_mut(1)[0] = rat(1, 1);
    obstructed.block_mut(1)[1] = rat(-1, 1);
    check(
        cuspidal_witness_exact(&obstructed, &toy).is_none(),
        "an unsolvable depth-one system produced a witness".into(),
    )
}

// -- criterion 7 ------------------------------------------------------------

/// Cusp transports factor through continued-fraction convergents.
fn c07_continued_fractions() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let basis = deep_basis();
    let tr = Transporter::new(basis, TransportConfig { depth: 2, ..Default::default() });
    for text in ["1", "2/3", "3/5"] {
        let r = cf_residual(&tr, &Cusp::parse(text).unwrap());
        check(r < TOL, format!("decomposition at {text} leaves residual {r:.3e}"))?;
    }
    Ok(())
}

// -- criterion 8 ------------------------------------------------------------

/// The generator value at one base point is assembled from the connecting
/// transport: at depth three, transporting from the involution image of
/// the order-three fixed point equals J * sigma(J)^-1 with J the transport
/// from the order-two fixed point.
fn c08_involution_assembly() -> Result<(), String> {
    const TOL: f64 = 1e-6;
    let basis = deep_basis();
    let group: SeriesGroup<Complex64> = SeriesGroup::new(basis, 3);
    let tr = Transporter::new(basis, TransportConfig { depth: 3, ..Default::default() });
    let rho = ExtendedPoint::rho();
    let s = GroupElement::sigma();
    let s_rho = s.mat().mobius(&rho);
    let j = tr.transport(&ExtendedPoint::i(), &rho);
    let assembled = group.mul(&j, &group.inv(&group.act(&s, &j)));
    let direct = tr.transport(&s_rho, &rho);
    let gap = group.dist(&direct, &assembled);
    check(gap < TOL, format!("assembly differs from the direct transport by {gap:.3e}"))
}

// -- criterion 9 ------------------------------------------------------------

/// Completed transforms by quadrature match the Dirichlet series deep in
/// the convergence region, and the functional equation holds with the
/// positive sign across the critical strip.
fn c09_mellin() -> Result<(), String> {
    const TOL: f64 = 1e-8;
    let f = CuspForm::weight12(40_000);
    for s in [8.5, 9.0, 10.0] {
        let sc = Complex64::new(s, 0.0);
        let quad = mellin::lambda(&f, sc).value;
        let dir = mellin::lambda_via_dirichlet(&f, sc)
            .ok_or("Dirichlet evaluation refused a convergent argument")?
            .value;
        let rel = (quad - dir).norm() / dir.norm();
        check(rel < TOL, format!("quadrature vs series at s={s} differ by {rel:.3e}"))?;
    }
    for s in 2..=10 {
        let (plus, _) = mellin::functional_equation_residual(&f, Complex64::new(s as f64, 0.0));
        check(plus < TOL, format!("positive-sign reflection fails at s={s}: {plus:.3e}"))?;
    }
    Ok(())
}

// -- criterion 10 -----------------------------------------------------------

/// The series-valued transform satisfies its reflection identity at depth
/// two, and at integer arguments it inverts the period series, which is
/// the order-two generator relation in disguise.
fn c10_series_transform() -> Result<(), String> {
    const FE_TOL: f64 = 1e-6;
    const COINCIDENCE_TOL: f64 = 1e-8;
    let f = CuspForm::weight12(600);
    let letters: Vec<(&CuspForm, Complex64)> =
        (1..12).map(|m| (&f, Complex64::new(m as f64, 0.0))).collect();
    let fe = mellin::total_mellin_fe_residual(&letters, 2);
    check(fe < FE_TOL, format!("reflection identity residual {fe:.3e}"))?;

    let tm = mellin::total_mellin(&letters, 2);
    let basis = DensityBasis::full(vec![f.clone()]);
    let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
    let gap = tm.dist(&period_series(&tr).inverse());
    check(
        gap < COINCIDENCE_TOL,
        format!("transform and inverse period series differ by {gap:.3e}"),
    )
}

// -- criterion 11 -----------------------------------------------------------

/// Symbol spaces have the dimensions the valence formula predicts for
/// weights ten through twenty-two, and the weight-twelve integration
/// pairing has full rank two with healthy conditioning.
fn c11_symbol_spaces() -> Result<(), String> {
    const RATIO: f64 = 1e-4;
    let expected = [(10u32, 0usize), (12, 2), (14, 0), (16, 2), (18, 2), (20, 2), (22, 2)];
    for (k, cuspidal) in expected {
        let space = SymbolSpace::new(k);
        check(
            space.cuspidal_dim() == cuspidal,
            format!("weight {k}: cuspidal dimension {}", space.cuspidal_dim()),
        )?;
        check(
            2 * dim_cusp_forms(k) == cuspidal,
            format!("weight {k}: valence count disagrees with the table"),
        )?;
        check(
            space.dim() == cuspidal + 1,
            format!("weight {k}: total dimension {}", space.dim()),
        )?;
    }

    let space = SymbolSpace::new(12);
    let basis = space.cuspidal_basis();
    let f = CuspForm::weight12(1200);
    let pairing = PeriodPairing::new(&f);
    let p1 = pairing.pair(&basis[0]);
    let p2 = pairing.pair(&basis[1]);
    let frob2 = p1.norm_sqr() + p2.norm_sqr();
    let det = p1.re * p2.im - p2.re * p1.im;
    let gapv = (frob2 * frob2 - 4.0 * det * det).max(0.0).sqrt();
    let s_max = (0.5 * (frob2 + gapv)).sqrt();
    let s_min = (0.5 * (frob2 - gapv)).max(0.0).sqrt();
    check(
        s_min > RATIO * s_max,
        format!("pairing matrix nearly singular: {s_min:.3e} vs {s_max:.3e}"),
    )?;

    let worst = space
        .relation_vectors()
        .iter()
        .map(|v| pairing.pair(&PolySym::from_coeffs(v.clone())).norm())
        .fold(0.0, f64::max);
    check(worst < 1e-8, format!("a relation vector pairs to {worst:.3e}"))
}

// -- criterion 12 -----------------------------------------------------------

/// Inducing an exact coboundary through the six cosets of the principal
/// congruence subgroup of level two preserves both laws exactly, and
/// restricting back recovers the original values exactly.
fn c12_coset_induction() -> Result<(), String> {
    let basis = deep_basis();
    let exact_group: SeriesGroup<BigRational> = SeriesGroup::new(basis, 2);
    let n = exact_group.n_letters();
    let mut prim = TruncSeries::<BigRational>::zero(n, 2);
    prim.block_mut(1)[1] = rat(1, 2);
    prim.block_mut(1)[n - 2] = rat(-3, 5);
    let b = prim.exp();
    let bi = exact_group.inv(&b);
    let s = GroupElement::sigma();
    let t = GroupElement::tau();
    let inner = Cocycle::new(
        &exact_group,
        exact_group.mul(&bi, &exact_group.act(&s, &b)),
        exact_group.mul(&bi, &exact_group.act(&t, &b)),
    );

    let cosets = CosetSystem::gamma2();
    let igroup = InducedGroup::new(&exact_group, &cosets);
    let induced = shapiro_induce(&inner, &igroup);
    let worst = induced.relations_residual().max(induced.cocycle_residual(&fixed_pairs()));
    check(worst == 0.0, format!("induced cocycle leaves residual {worst:.3e}"))?;

    for text in ["ttstts", "sttstt", "ttsttsttstts"] {
        let w = GroupWord::parse(text).unwrap();
        let slot = &induced.value(&w)[cosets.identity_slot()];
        let gap = exact_group.dist_abs(slot, &inner.value(&w));
        check(gap == 0.0, format!("restriction at {text} drifts by {gap:.3e}"))?;
    }
    Ok(())
}

// -- runner -----------------------------------------------------------------

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<(), String>); 12] = [
        ("01 normal forms sound and unique", c01_normal_forms),
        ("02 generator relations at three bases", c02_generator_relations),
        ("03 cocycle law, sampled and exact", c03_cocycle_law),
        ("04 transport values are group-like", c04_grouplike),
        ("05 base-point independence up to twist", c05_base_point_independence),
        ("06 cuspidality witness and obstruction", c06_cuspidality),
        ("07 continued-fraction decomposition", c07_continued_fractions),
        ("08 involution assembly of transports", c08_involution_assembly),
        ("09 completed transforms and reflection (sign +)", c09_mellin),
        ("10 series transform inverts periods", c10_series_transform),
        ("11 symbol dimensions and pairing rank", c11_symbol_spaces),
        ("12 exact coset induction roundtrip", c12_coset_induction),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        let outcome = match catch_unwind(run) {
            Ok(Ok(())) => None,
            Ok(Err(msg)) => Some(msg),
            Err(panic) => Some(match panic.downcast_ref::<&str>() {
                Some(s) => s.to_string(),
                None => panic
                    .downcast_ref::<String>()
                    .cloned()
                    .unwrap_or_else(|| "panicked".to_string()),
            }),
        };
        match outcome {
            None => println!("PASS {name}"),
            Some(msg) => {
                println!("FAIL {name}: {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
