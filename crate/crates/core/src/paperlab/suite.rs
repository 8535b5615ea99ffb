//! Named verification groups. Each group returns its checks; an error inside
//! a group becomes a single failing check.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{q, Check, Report};
use crate::algebra::matrix::mat_mul;
use crate::algebra::{BigFloat, Cplx, Rational, RealField, Scalar, Surd, UniPoly};
use crate::error::{Error, Result};
use crate::grassmann::{
    center_genericity, gram_and_defect, jp_checks, ramification, second_ff_norm, v6_annihilators, wedge_pencil,
    GenericityMethod, PencilCurve,
};
use crate::moduli::{self, AnyConstruction, Construction};
use crate::sl2rep::{self, BinaryForm, GroupElement, Orbit, SkewTensor};

pub const SUITES: [&str; 16] = [
    "standard_curve",
    "rmk",
    "f_identity",
    "gradient",
    "involution",
    "w_functional",
    "eg_exact",
    "eg_exact1",
    "eg_cusp",
    "s1_level_set",
    "family33",
    "ramification",
    "representation",
    "genericity",
    "example5",
    "second_ff",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub precision: usize,
    pub tol: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { precision: crate::DEFAULT_PRECISION, tol: crate::DEFAULT_TOL }
    }
}

pub fn run_suite(name: &str, o: &SuiteOptions) -> Result<Vec<Check>> {
    match name {
        "standard_curve" => standard_curve(),
        "rmk" => rmk(),
        "f_identity" => f_identity(),
        "gradient" => gradient(),
        "involution" => involution(),
        "w_functional" => w_functional(o),
        "eg_exact" => eg_exact(o),
        "eg_exact1" => eg_exact1(),
        "eg_cusp" => Ok(super::cusp_verify(o.precision)?.checks),
        "s1_level_set" => s1_level_set(o),
        "family33" => family33(o),
        "ramification" => ramification_dichotomy(o),
        "representation" => representation(),
        "genericity" => genericity(),
        "example5" => Ok(super::example5_suite(o.precision)?.checks),
        "second_ff" => second_ff(o),
        _ => Err(Error::Argument(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
}

/// Runs the named groups (all when `only` is `None`) in the fixed order.
pub fn verify_paper(only: Option<&[String]>, o: &SuiteOptions) -> Result<Report> {
    if let Some(names) = only {
        if let Some(bad) = names.iter().find(|n| !SUITES.contains(&n.as_str())) {
            return Err(Error::Argument(format!("unknown suite {bad:?}; known: {}", SUITES.join(", "))));
        }
    }
    let mut rep = Report::default();
    for name in SUITES {
        if only.is_some_and(|n| !n.iter().any(|x| x == name)) {
            continue;
        }
        match run_suite(name, o) {
            Ok(checks) => rep.checks.extend(checks),
            Err(e) => rep.push(Check::truth(format!("{name}.error"), "no error", e.to_string(), false)),
        }
    }
    Ok(rep)
}

fn qi(n: i64) -> Rational {
    q(n, 1)
}

fn sr(x: Rational) -> Surd {
    Surd::from_rational(x)
}

fn cs(n: i64) -> Cplx<Surd> {
    Cplx::real(Surd::from_int(n))
}

fn exact_construction(t: [Rational; 3]) -> Result<Construction<Surd>> {
    moduli::construct_curve(&t.map(sr), 0, 0.0)
}

fn standard_pencil() -> Result<PencilCurve<Surd>> {
    let s6 = Cplx::real(Surd::sqrt_rational(&qi(6)).expect("sqrt 6"));
    let m = |c: Cplx<Surd>, k| UniPoly::monomial(c, k);
    PencilCurve::new(
        vec![m(cs(1), 0), UniPoly::zero(), m(-s6.clone(), 2), m(cs(-4), 3), m(cs(-3), 4)],
        vec![UniPoly::zero(), m(cs(1), 0), m(s6, 1), m(cs(3), 2), m(cs(2), 3)],
    )
}

fn standard_curve() -> Result<Vec<Check>> {
    let c = exact_construction([qi(1), qi(1), qi(1)])?;
    let mut out = vec![Check::truth("standard_curve.pencil", "standard pencil", "", c.pencil == standard_pencil()?)];
    let (g, defect) = gram_and_defect(&c.curve)?;
    let diag_ok = (0..7).all(|k| {
        (0..7).all(|l| g[k][l] == if k == l { cs(sl2rep::binom(6, k) as i64) } else { cs(0) })
    });
    out.push(Check::truth("standard_curve.gram", "diag(1,6,15,20,15,6,1)", format!("defect {defect}"), diag_ok));
    out.push(Check::truth("standard_curve.reducible", "true", c.certificate.reducible.to_string(), c.certificate.reducible));
    out.push(Check::exact("standard_curve.count", &1, &moduli::count_solutions_rational(&[qi(1), qi(1), qi(1)])?));
    Ok(out)
}

fn rmk() -> Result<Vec<Check>> {
    let t = [qi(1), q(1, 16), q(1, 4096)];
    let c = exact_construction(t.clone())?;
    let s6 = Cplx::real(Surd::sqrt_rational(&qi(6)).expect("sqrt 6"));
    let m = |c: Cplx<Surd>, k| UniPoly::monomial(c, k);
    let reference = PencilCurve::new(
        vec![m(cs(1), 0), UniPoly::zero(), m(-s6.clone(), 2), m(cs(-2), 3), m(cs(-3), 4)],
        vec![UniPoly::zero(), m(cs(1), 0), m(s6, 1), m(cs(3), 2), m(cs(4), 3)],
    )?;
    // z -> -z together with the column signs (1, 1, -1, -1, -1)
    let sign = [1i64, 1, -1, -1, -1];
    let congruent = (0..2).all(|r| {
        (0..5).all(|col| {
            let p = reference.entry(r, col);
            let moved: Vec<_> = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, x)| x.clone() * x.lift_i(sign[col] * if k % 2 == 0 { 1 } else { -1 }))
                .collect();
            c.pencil.entry(r, col) == &UniPoly::new(moved)
        })
    });
    let mut out = vec![Check::truth("rmk.pencil_up_to_phase", "congruent", "", congruent)];
    let reference_curve = wedge_pencil(&reference)?;
    out.push(Check::exact("rmk.reference_gram_defect", &0.0, &gram_and_defect(&reference_curve)?.1));
    for (n, v) in [("X", &c.point.x), ("Y", &c.point.y), ("Z", &c.point.z)] {
        out.push(Check::exact(format!("rmk.{n}"), &Surd::from_int(2), v));
    }
    out.push(Check::exact("rmk.count", &1, &moduli::count_solutions_rational(&t)?));
    let w = moduli::w_closed(&sr(qi(1)), &sr(q(1, 16)), &sr(qi(1)))?;
    out.push(Check::exact("rmk.W_over_pi", &sr(q(184, 7)), &w));
    Ok(out)
}

fn f_identity() -> Result<Vec<Check>> {
    let mut out = vec![match moduli::f_identity_check() {
        Ok(()) => Check::truth("f_identity.symbolic", "identity holds", "holds", true),
        Err(e) => Check::truth("f_identity.symbolic", "identity holds", e.to_string(), false),
    }];
    for t in [[qi(1), q(1, 2), q(1, 8)], [q(3, 7), q(5, 2), q(11, 13)], [q(11, 6), q(1331, 864), q(2, 3)]] {
        let (a, b) = moduli::f_value(&t[0], &t[1], &t[2])?;
        out.push(Check::exact(format!("f_identity.at({},{},{})", t[0], t[1], t[2]), &a, &b));
    }
    Ok(out)
}

fn gradient() -> Result<Vec<Check>> {
    let (v, g) = moduli::f_poly().eval_and_gradient(&[qi(1), q(1, 2), q(1, 8)])?;
    let show = |g: &[Rational]| g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let expected = [qi(0), q(-13125, 256), q(4375, 64)];
    Ok(vec![
        Check::exact("gradient.F(1,1/2,1/8)", &qi(0), &v),
        Check::new("gradient.grad_F", show(&expected), show(&g), "exact", g == expected),
    ])
}

fn involution() -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (mut homog, mut invol) = (0usize, 0usize);
    let n = 100;
    for _ in 0..n {
        let mut r = || q(rng.random_range(1..200), rng.random_range(1..200));
        let t = [r(), r(), r()];
        let g = moduli::g_of(&t)?;
        let st = moduli::sigma(&t)?;
        if moduli::f_poly().eval(&st)? == moduli::f_poly().eval(&t)? * g.pow(21) {
            homog += 1;
        }
        if moduli::sigma(&st)? == t {
            invol += 1;
        }
    }
    Ok(vec![
        Check::exact("involution.F_sigma_is_g21_F", &n, &homog),
        Check::exact("involution.sigma_squared_is_identity", &n, &invol),
    ])
}

fn float_construction(t: &[Rational; 3], branch: usize, o: &SuiteOptions) -> Result<AnyConstruction> {
    moduli::construct_rational(t, branch, o.precision, o.tol)
}

fn w_functional(o: &SuiteOptions) -> Result<Vec<Check>> {
    let one = sr(qi(1));
    let mut out = vec![
        Check::exact("w_functional.standard", &sr(qi(40)), &moduli::w_closed(&one, &one, &one)?),
        Check::exact("w_functional.bracket_at_standard", &qi(0), &moduli::w_bracket_poly().eval(&[qi(1), qi(1), qi(1)])?),
        Check::exact("w_functional.rmk", &sr(q(184, 7)), &moduli::w_closed(&one, &sr(q(1, 16)), &one)?),
    ];
    let b = q(7, 52);
    let points: [([Rational; 3], usize); 5] = [
        ([qi(1), qi(1), qi(1)], 0),
        ([qi(1), q(1, 16), q(1, 4096)], 0),
        ([q(11, 6), q(1331, 864), q(19487171, 17915904)], 0),
        ([q(11, 6), q(1331, 864), q(19487171, 17915904)], 1),
        ([qi(1), b.clone(), b.pow(3)], 0),
    ];
    for (k, (t, branch)) in points.iter().enumerate() {
        let c = float_construction(t, *branch, o)?;
        let closed = c.w_over_pi() * PI;
        let numeric = c.certificate().w_numeric.unwrap_or(f64::NAN);
        out.push(Check::at_most(format!("w_functional.numeric_vs_closed{k}"), (numeric / closed - 1.0).abs(), 1e-6));
    }
    Ok(out)
}

fn eg_exact(o: &SuiteOptions) -> Result<Vec<Check>> {
    let t = [q(11, 6), q(1331, 864), q(19487171, 17915904)];
    let mp = moduli::derive_rational(&t)?;
    let mut out = vec![
        Check::exact("eg_exact.F", &qi(0), &moduli::f_poly().eval(&t)?),
        Check::exact("eg_exact.t2", &sr(q(14641, 7776)), &mp.t[2]),
        Check::close("eg_exact.X2", 125.0 / 33.0, mp.x2.to_f64(), 1e-12),
        Check::exact("eg_exact.X2_exact", &sr(q(125, 33)), &mp.x2),
        Check::exact("eg_exact.Z", &Surd::from_int(2), &mp.z),
        Check::exact("eg_exact.count", &2, &moduli::count_solutions_rational(&t)?),
    ];
    let mut phases = Vec::new();
    for branch in 0..2 {
        let c = float_construction(&t, branch, o)?;
        let cert = c.certificate();
        out.push(Check::at_most(format!("eg_exact.branch{branch}.gram_defect"), cert.gram_defect, 1e-10));
        out.push(Check::at_most(format!("eg_exact.branch{branch}.plucker_residual"), cert.plucker_residual_max, 1e-10));
        let AnyConstruction::Float(c) = c else {
            return Err(Error::Inconsistent("eg-exact needs irrational roots".into()));
        };
        phases.push(c.solution.angles.phases.clone().map(|p| p.to_c64()));
    }
    // conjugate phases, up to the shift theta_k -> theta_k + 2 pi m k / 6
    let conj = (0..6).any(|m| {
        (0..7).all(|k| {
            let z = Cplx::<f64>::from_polar(1.0, PI * (m * k) as f64 / 3.0);
            (phases[0][k].conj() * z - phases[1][k].clone()).norm() < 1e-12
        })
    });
    out.push(Check::truth("eg_exact.branches_conjugate", "conjugate modulo zeta6 shift", "", conj));
    Ok(out)
}

fn eg_exact1() -> Result<Vec<Check>> {
    let r79 = Surd::sqrt_rational(&qi(79)).expect("sqrt 79");
    let lin = |a: i64, b: i64, d: i64| (sr(qi(a)) + sr(qi(b)) * r79.clone()) * sr(q(1, d));
    let t0 = lin(20, 2, 21);
    let t24 = lin(209, 23, 189);
    let t3 = lin(9, 1, 8);
    let d = moduli::derived_t(&t0, &t0, &t0)?;
    let f = moduli::f_poly().eval_generic(&[t0.clone(), t0.clone(), t0.clone()], |c, x| x.lift(c)).expect("numeric");
    let mut out = vec![
        Check::exact("eg_exact1.t2", &t24, &d[0]),
        Check::exact("eg_exact1.t3", &t3, &d[1]),
        Check::exact("eg_exact1.t4", &t24, &d[2]),
        Check::exact("eg_exact1.F_exact", &Surd::from_int(0), &f),
    ];
    let prec = 200;
    let tf = t0.to_bigfloat(prec);
    let mp = moduli::derive_data(&tf, &tf, &tf)?;
    out.push(Check::at_most("eg_exact1.F_relative_200bit", mp.f_relative(), 1e-40));
    Ok(out)
}

fn s1_level_set(o: &SuiteOptions) -> Result<Vec<Check>> {
    let e = moduli::level_set_s1(&sr(q(11, 6)))?;
    let b = moduli::level_set_s1(&sr(qi(1)))?;
    let mut out = vec![
        Check::exact("s1_level_set.F1(11/6)", &sr(q(1331, 864)), &e.f1),
        Check::exact("s1_level_set.F2(11/6)", &sr(q(1331, 864)), &e.f2),
        Check::exact("s1_level_set.F1(1)", &sr(qi(1)), &b.f1),
        Check::exact("s1_level_set.F2(1)", &sr(q(1, 16)), &b.f2),
    ];
    let mut worst = 0.0f64;
    for k in 0..=12 {
        let s = BigFloat::from_rational(&(qi(1) + q(5, 6) * q(k, 12)), o.precision);
        let br = moduli::level_set_s1(&s)?;
        worst = worst.max(moduli::s1_residual(&s, &br.f1)?).max(moduli::s1_residual(&s, &br.f2)?);
    }
    out.push(Check::at_most("s1_level_set.branch_residual", worst, 1e-30));
    out.extend(g1_scan(o)?);
    Ok(out)
}

/// The g = 1 picture: a vertical segment over t0 = 1, two arcs over
/// (1, 11/6) and nothing elsewhere.
fn g1_scan(o: &SuiteOptions) -> Result<Vec<Check>> {
    let samples = moduli::scan(&qi(1), &q(1, 2), &q(5, 2), 17, o.precision, o.tol)?;
    let (mut seg, mut arcs_ok, mut outside) = (Vec::new(), true, 0usize);
    let mut arc_rows = 0;
    for t0 in moduli::grid(&q(1, 2), &q(5, 2), 17)? {
        let x = t0.to_f64();
        let row: Vec<f64> = samples.iter().filter(|s| s.t0 == x).map(|s| s.t1).collect();
        if t0 == qi(1) {
            seg = row;
        } else if t0 > qi(1) && t0 < q(11, 6) {
            arc_rows += 1;
            let br = moduli::level_set_s1(&BigFloat::from_rational(&t0, o.precision))?;
            let (f1, f2) = (br.f1.to_f64(), br.f2.to_f64());
            let hit = |v: f64| row.iter().any(|t| (t - v).abs() <= 1e-9 * v);
            arcs_ok &= row.len() == 2 && hit(f1) && hit(f2);
        } else {
            outside += row.len();
        }
    }
    let lo = seg.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = seg.iter().cloned().fold(0.0, f64::max);
    Ok(vec![
        Check::close("s1_level_set.g1_segment_bottom", 1.0 / 16.0, lo, 1e-12),
        Check::close("s1_level_set.g1_segment_top", 1.0, hi, 1e-12),
        Check::truth("s1_level_set.g1_segment_sampled", ">= 3 samples", seg.len().to_string(), seg.len() >= 3),
        Check::truth("s1_level_set.g1_two_arcs", format!("two arcs on {arc_rows} rows").as_str(), "", arcs_ok && arc_rows > 0),
        Check::exact("s1_level_set.g1_nothing_elsewhere", &0, &outside),
    ])
}

fn thetas(n: usize) -> Vec<f64> {
    (0..n).map(|k| 0.1 + 2.0 * PI * k as f64 / n as f64).collect()
}

fn family33(o: &SuiteOptions) -> Result<Vec<Check>> {
    let (mut jp, mut defect) = (0.0f64, 0.0f64);
    for th in thetas(12) {
        let f = moduli::family33_theta(&BigFloat::from_f64(th, o.precision), o.tol)?;
        let r = jp_checks(&f.pencil)?;
        jp = jp.max(r.residuals.iter().cloned().fold(0.0, f64::max));
        let (g, d) = gram_and_defect(&f.curve)?;
        defect = defect.max(d / g[0][0].re.to_f64());
    }
    Ok(vec![
        Check::at_most("family33.jp_residual_max", jp, 1e-12),
        Check::at_most("family33.gram_defect_max", defect, 1e-10),
    ])
}

fn random_int(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = rng.random_range(-9..=9);
        if v != 0 {
            return v;
        }
    }
}

/// A rational group element whose open-orbit point has nonzero end
/// coordinates, so the transversal curve keeps degree 6 and valuation 0.
fn random_group(rng: &mut ChaCha8Rng) -> GroupElement<Cplx<Surd>> {
    loop {
        let [a, b, c, d] = [(); 4].map(|_| random_int(rng));
        let ends = a * b * (a.pow(4) - b.pow(4)) != 0 && c * d * (c.pow(4) - d.pow(4)) != 0;
        if a * d - b * c != 0 && ends {
            return GroupElement::new(cs(a), cs(b), cs(c), cs(d)).expect("nonsingular");
        }
    }
}

fn ramification_dichotomy(o: &SuiteOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2a);
    let n = 50;
    let (mut trans, mut tang) = (0usize, 0usize);
    for _ in 0..n {
        let a: [Cplx<Surd>; 5] = std::array::from_fn(|_| cs(random_int(&mut rng)));
        let g = random_group(&mut rng);
        let x: [Cplx<Surd>; 7] = sl2rep::orbit_point(&g, Orbit::Open)?.try_into().expect("seven");
        let f = moduli::transversal(&a, &x, 0.0)?;
        if f.degree() == 6 && ramification(&f, o.tol)?.support_is_zero_and_infinity(1e-12) {
            trans += 1;
        }
        let y: [Cplx<Surd>; 7] = sl2rep::orbit_point(&g, Orbit::U5V)?.try_into().expect("seven");
        let mu = Cplx::new(Surd::from_int(random_int(&mut rng)), Surd::from_int(random_int(&mut rng)));
        let f = moduli::tangential(&a, &y, &mu, 0.0)?;
        if ramification(&f, o.tol)?.support_is_infinity() {
            tang += 1;
        }
    }
    let std = wedge_pencil(&standard_pencil()?)?;
    let reducible = ramification(&std, o.tol)?.reducible;
    Ok(vec![
        Check::exact("ramification.transversal_zero_and_infinity", &n, &trans),
        Check::exact("ramification.tangential_infinity_only", &n, &tang),
        Check::truth("ramification.standard_reducible", "true", reducible.to_string(), reducible),
    ])
}

fn random_sl2(rng: &mut ChaCha8Rng) -> GroupElement<Surd> {
    // (1 x; 0 1)(1 0; y 1)
    let (x, y) = (random_int(rng), random_int(rng));
    let s = |n: i64| Surd::from_int(n);
    GroupElement::new(s(1 + x * y), s(x), s(y), s(1)).expect("det 1")
}

fn random_form(rng: &mut ChaCha8Rng, deg: usize) -> BinaryForm<Surd> {
    BinaryForm::new((0..=deg).map(|_| sr(q(rng.random_range(-9..=9), rng.random_range(1..5)))).collect())
        .expect("coefficients")
}

fn representation() -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut out = Vec::new();
    let (mut hom, mut equi, mut comm, mut u5v, mut open) = (true, true, true, true, true);
    for _ in 0..6 {
        let (g, h) = (random_sl2(&mut rng), random_sl2(&mut rng));
        for n in [4, 6] {
            hom &= sl2rep::rep_matrix(&g.mul(&h), n)? == mat_mul(&sl2rep::rep_matrix(&g, n)?, &sl2rep::rep_matrix(&h, n)?);
        }
        let (f, k) = (random_form(&mut rng, 4), random_form(&mut rng, 4));
        for p in [1, 2, 3, 4] {
            let lhs = sl2rep::transvectant(&f.act(&g)?, &k.act(&g)?, p)?;
            let rhs = sl2rep::transvectant(&f, &k, p)?.act(&g)?;
            equi &= lhs == rhs;
        }
        comm &= sl2rep::commutation_check(&g)?;
        // a general element of GL2 for the orbit identities
        let m = GroupElement::new(
            Surd::from_int(random_int(&mut rng)),
            Surd::from_int(random_int(&mut rng)),
            Surd::from_int(random_int(&mut rng)),
            Surd::from_int(random_int(&mut rng)),
        );
        let Ok(m) = m else { continue };
        let nrm = sl2rep::orbit_point(&m, Orbit::U5V)?;
        u5v &= sl2rep::invariant_quadric(&nrm) == Surd::from_int(0);
        let nrm = sl2rep::orbit_point(&m, Orbit::Open)?;
        open &= sl2rep::invariant_quadric(&nrm) == Surd::from_int(2) * m.det().pow(6);
    }
    out.push(Check::truth("representation.homomorphism", "true", hom.to_string(), hom));
    out.push(Check::truth("representation.transvectant_equivariance", "true", equi.to_string(), equi));
    out.push(Check::truth("representation.intertwining", "true", comm.to_string(), comm));
    out.push(Check::truth("representation.q_on_u5v_orbit", "true", u5v.to_string(), u5v));
    out.push(Check::truth("representation.q_on_open_orbit", "true", open.to_string(), open));
    let like = Surd::from_int(1);
    let form: Vec<Cplx<Surd>> = [0, 1, 0, 0, 0, -1, 0].iter().map(|&x| cs(x)).collect();
    let iso = sl2rep::isotropy24(&like)?;
    let fixed = iso.iter().filter(|h| {
        sl2rep::act_plain(h, &form).is_ok_and(|img| {
            let k = img[1].clone();
            !k.is_zero() && img == form.iter().map(|x| x.clone() * k.clone()).collect::<Vec<_>>()
        })
    });
    out.push(Check::exact("representation.isotropy_fixes_form", &24, &fixed.count()));
    out.push(Check::exact("representation.clebsch_gordan_ranks", &"(7, 3)".to_string(), &format!("{:?}", sl2rep::clebsch_gordan_ranks())));
    Ok(out)
}

fn genericity() -> Result<Vec<Check>> {
    let like = Surd::from_int(1);
    let [a, b, c] = v6_annihilators(&like)?;
    let g = center_genericity(&a, &b, &c, 10_000)?;
    let how = match &g.method {
        GenericityMethod::Elimination => "elimination".to_string(),
        GenericityMethod::Sampling { samples, min_residual } => format!("{samples} samples, min {min_residual:e}"),
    };
    let e = |i, j| {
        let mut p = vec![qi(0); 10];
        p[sl2rep::pair_index(i, j)] = qi(1);
        SkewTensor { p }
    };
    let d = center_genericity(&e(0, 1), &e(0, 2), &e(0, 3), 100)?;
    Ok(vec![
        Check::truth("genericity.annihilator_net_generic", "generic", how, g.generic),
        Check::truth(
            "genericity.degenerate_net_witness",
            "not generic, with witness",
            format!("{:?}", d.witness),
            !d.generic && d.witness.is_some(),
        ),
    ])
}

fn second_ff(o: &SuiteOptions) -> Result<Vec<Check>> {
    let grid: Vec<(f64, f64)> =
        [0.0, 0.3, 0.7, 1.0, 1.6, 3.0].iter().flat_map(|&r| (0..6).map(move |k| (r, PI * k as f64 / 3.0))).collect();
    let mut spreads = Vec::new();
    for th in thetas(11).into_iter().filter(|t| (t - PI).abs() > 1e-3).take(10) {
        let f = moduli::family33_theta(&BigFloat::from_f64(th, o.precision), o.tol)?;
        let vals: Vec<f64> = grid
            .iter()
            .map(|&(r, phi)| {
                let z = Cplx::new(BigFloat::from_f64(r * phi.cos(), o.precision), BigFloat::from_f64(r * phi.sin(), o.precision));
                second_ff_norm(&f.curve, &z, o.tol).map(|x| x.to_f64())
            })
            .collect::<Result<_>>()?;
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        spreads.push(hi - lo);
    }
    let min_spread = spreads.iter().cloned().fold(f64::INFINITY, f64::min);
    let std = wedge_pencil(&standard_pencil()?)?;
    let mut dev = 0.0f64;
    for &(r, phi) in &grid {
        let z = Cplx::new(BigFloat::from_f64(r * phi.cos(), o.precision), BigFloat::from_f64(r * phi.sin(), o.precision));
        let fl = std.map_kind(|c| Cplx::new(c.re.to_bigfloat(o.precision), c.im.to_bigfloat(o.precision)));
        dev = dev.max((second_ff_norm(&fl, &z, o.tol)?.to_f64() - 20.0 / 3.0).abs());
    }
    Ok(vec![
        Check::exact("second_ff.curves", &10, &spreads.len()),
        Check::truth("second_ff.nonconstant", "> 1e-3", format!("{min_spread:e}"), min_spread > 1e-3),
        Check::at_most("second_ff.standard_constant", dev, 1e-12),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_group_passes() {
        let r = verify_paper(None, &SuiteOptions::default()).unwrap();
        assert!(r.passed(), "{:#?}", r.failures());
    }

    #[test]
    fn verdicts_do_not_depend_on_precision() {
        let only = ["s1_level_set".to_string(), "eg_cusp".to_string(), "family33".to_string()];
        let v = |precision| {
            let r = verify_paper(Some(&only), &SuiteOptions { precision, tol: 1e-10 }).unwrap();
            r.checks.iter().map(|c| (c.check_name.clone(), c.pass)).collect::<Vec<_>>()
        };
        assert_eq!(v(128), v(256));
    }

    #[test]
    fn unknown_group_is_rejected() {
        assert!(verify_paper(Some(&["nope".to_string()]), &SuiteOptions::default()).is_err());
        let r = verify_paper(Some(&["w_functional".to_string()]), &SuiteOptions::default()).unwrap();
        assert!(r.checks.iter().all(|c| c.check_name.starts_with("w_functional.")));
    }
}
