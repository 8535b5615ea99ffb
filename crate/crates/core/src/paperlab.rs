//! Transcribed examples and their verification: the cusp system, the plane
//! curve through `(t0, g) = (1, 1)` and the floating error bound.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::bigfloat::parse_rational;
use crate::algebra::resultant::resultant;
use crate::algebra::roots::{isolate_roots, polish, square_free_part};
use crate::algebra::{BigFloat, MultiPoly, Rational, RealField, Scalar, UniPoly};
use crate::error::{arg, Error, Result};
use crate::moduli::{self, fmt_sig};

mod suite;

pub use suite::{run_suite, verify_paper, SuiteOptions, SUITES};

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub check_name: String,
    pub expected: String,
    pub computed: String,
    pub tolerance: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, tolerance: impl Into<String>, pass: bool) -> Self {
        Check { check_name: name.into(), expected: expected.into(), computed: computed.into(), tolerance: tolerance.into(), pass }
    }

    /// Exact comparison of displayed values.
    pub fn exact<T: PartialEq + std::fmt::Display>(name: impl Into<String>, expected: &T, computed: &T) -> Self {
        Check::new(name, expected.to_string(), computed.to_string(), "exact", expected == computed)
    }

    /// `|expected - computed| <= tol`.
    pub fn close(name: impl Into<String>, expected: f64, computed: f64, tol: f64) -> Self {
        let pass = (expected - computed).abs() <= tol;
        Check::new(name, fmt_sig(expected, 12), fmt_sig(computed, 12), format!("{tol:e}"), pass)
    }

    /// `computed <= bound`.
    pub fn at_most(name: impl Into<String>, computed: f64, bound: f64) -> Self {
        Check::new(name, format!("<= {bound:e}"), format!("{computed:e}"), format!("{bound:e}"), computed <= bound)
    }

    pub fn truth(name: impl Into<String>, expected: &str, computed: impl Into<String>, pass: bool) -> Self {
        Check::new(name, expected, computed, "exact", pass)
    }
}

/// A list of checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

fn big(s: &str) -> Rational {
    s.parse().expect("integer literal")
}

fn terms3(vars: &[&str], t: &[(&str, [u32; 3])]) -> MultiPoly<Rational> {
    MultiPoly::from_terms(vars, t.iter().map(|(c, e)| (big(c), e.to_vec())))
}

/// The polynomials of the cusp computation. `e` and `g` use the variables
/// `g, t0, t1`; `t0 = r_num/s` and `t1 = t/u` solve them linearly.
#[derive(Clone, Debug)]
pub struct CuspData {
    pub p: UniPoly<Rational>,
    pub q: UniPoly<Rational>,
    pub r: UniPoly<Rational>,
    pub e: MultiPoly<Rational>,
    pub g: MultiPoly<Rational>,
    pub r_num: UniPoly<Rational>,
    pub s: UniPoly<Rational>,
    pub t: UniPoly<Rational>,
    pub u: UniPoly<Rational>,
}

pub const CUSP_VARS: [&str; 3] = ["g", "t0", "t1"];

pub fn cusp_data() -> &'static CuspData {
    static D: OnceLock<CuspData> = OnceLock::new();
    D.get_or_init(|| CuspData {
        p: UniPoly::from_strs(&[
            "3004245721",
            "-139634316726",
            "-67838574585",
            "-318786958820",
            "-67838574585",
            "-139634316726",
            "3004245721",
        ]),
        q: UniPoly::from_strs(&["3452164", "-17915544", "26076060", "-19711080", "36454860", "-40347234", "2537649"]),
        r: UniPoly::from_strs(&[
            "53689575410338079139841",
            "-261056339362401426814176",
            "-242591843875043061525060",
            "2695787548715827169923680",
            "-3541432129528999644182160",
            "-57789440847499427495680896",
            "6861904453295341780216896",
        ]),
        e: terms3(
            &CUSP_VARS,
            &[
                ("30407219135534569920865279281", [2, 0, 1]),
                ("-5684396631350441922486404084", [2, 0, 0]),
                ("4826381508202691775218328738", [1, 0, 1]),
                ("8781109390742136392820835978", [1, 0, 0]),
                ("22087970177286319548246901485", [0, 1, 0]),
                ("-37952752504503427337193407559", [0, 0, 1]),
                ("-10129670167010754418270796864", [0, 0, 0]),
            ],
        ),
        g: terms3(
            &CUSP_VARS,
            &[
                ("323983664320381367395969030814241", [3, 0, 0]),
                ("-15097919249633508113716536736052777", [2, 0, 0]),
                ("24001947052912436490532391777190000", [1, 0, 1]),
                ("-10297270579570244241163795555112489", [1, 0, 0]),
                ("-21160216103727154670480065729425120", [0, 1, 0]),
                ("38155570002907589892718590589124280", [0, 0, 1]),
                ("-10753529104240427995602453394128335", [0, 0, 0]),
            ],
        ),
        r_num: UniPoly::from_strs(&[
            "26132918116090821757236925434099385",
            "8122830950478969874129540484608001",
            "6658017307603866925677723269688366",
            "-8611085577295995251867740593198034",
            "-15046494988853004912329176221825959",
            "323983664320381367395969030814241",
        ]),
        s: UniPoly::from_strs(&[
            "1305303435283084266467628002760120",
            "20793797801629220801560324794395760",
            "21160216103727154670480065729425120",
        ]),
        t: UniPoly::from_strs(&[
            "26749087059945119323559494796984559",
            "2464682459146076205358051730246729",
            "26861312395386909671099284789417865",
            "-423618308217230277983078980100353",
        ]),
        u: UniPoly::from_strs(&[
            "2349546183509551679641730404968216",
            "37428836042932597442808584629912368",
            "38088388986708878406864118312965216",
        ]),
    })
}

/// A point of the cusp system.
#[derive(Clone, Debug)]
pub struct CuspPoint {
    pub g: BigFloat,
    pub t0: BigFloat,
    pub t1: BigFloat,
    pub t6: BigFloat,
}

fn lift_poly(p: &UniPoly<Rational>, prec: usize) -> UniPoly<BigFloat> {
    p.map(|c| BigFloat::from_rational(c, prec))
}

/// `|p(x)| / sum |c_k x^k|`.
fn relative_residual(p: &UniPoly<Rational>, x: &BigFloat) -> f64 {
    let prec = x.precision();
    let v = lift_poly(p, prec).eval(x).abs_r();
    let s = p.map(|c| BigFloat::from_rational(&c.abs(), prec)).eval(&x.abs_r());
    if s.is_zero_value() {
        0.0
    } else {
        v.div(&s).map(|r| r.to_f64()).unwrap_or(f64::INFINITY)
    }
}

fn root_width(bits: u32) -> Rational {
    Rational::new(One::one(), num_bigint::BigInt::from(1u8) << bits)
}

/// Positive real roots of `p` in `[lo, hi]` at `prec` bits.
fn roots_in(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational, prec: usize) -> Result<Vec<BigFloat>> {
    let sf = square_free_part(p);
    Ok(isolate_roots(&sf, lo, hi, &root_width(40))?.iter().map(|r| polish(&sf, r, prec)).collect())
}

/// The two positive roots of `p` in increasing order with their `(t0, t1, t6)`.
pub fn cusp_points(prec: usize) -> Result<Vec<CuspPoint>> {
    let d = cusp_data();
    let hi = crate::algebra::roots::cauchy_bound(&d.p);
    let lo = Rational::new(One::one(), num_bigint::BigInt::from(1u8) << 64u32);
    let mut out = Vec::new();
    for g in roots_in(&d.p, &lo, &hi, prec)? {
        let ev = |p: &UniPoly<Rational>| lift_poly(p, prec).eval(&g);
        let t0 = ev(&d.r_num).div(&ev(&d.s)).ok_or_else(|| Error::Degenerate("S vanishes at a root of p".into()))?;
        let t1 = ev(&d.t).div(&ev(&d.u)).ok_or_else(|| Error::Degenerate("U vanishes at a root of p".into()))?;
        let t6 = t1.pow(3).div(&(t0.clone() * t0.clone() * g.clone())).expect("positive");
        out.push(CuspPoint { g, t0, t1, t6 });
    }
    Ok(out)
}

/// `|computed - reference|` within one unit of the reference last digit; the
/// reference values are truncated, not rounded.
fn matches_truncated(reference: &str, computed: &BigFloat) -> (bool, String) {
    let p = parse_rational(reference).expect("decimal literal");
    let digits = reference.split('.').nth(1).map_or(0, |f| f.len());
    let ulp = Rational::new(One::one(), num_bigint::BigInt::from(10u8).pow(digits as u32));
    let diff = (computed.to_rational() - p).abs();
    (diff <= ulp, computed.to_decimal(digits + 4))
}

fn multi_at(p: &MultiPoly<Rational>, pt: &[BigFloat]) -> BigFloat {
    p.eval_generic(pt, |c, l| l.lift(c)).unwrap_or_else(|| pt[0].zero_like())
}

fn multi_scale(p: &MultiPoly<Rational>, pt: &[BigFloat]) -> BigFloat {
    let a: Vec<BigFloat> = pt.iter().map(|x| x.abs_r()).collect();
    p.eval_generic(&a, |c, l| l.lift(&c.abs())).unwrap_or_else(|| pt[0].zero_like())
}

/// `|f_g q_t - f_t q_g| / (|grad f| |grad q|)` at `pt`.
fn gradient_cross(f: &MultiPoly<Rational>, q: &MultiPoly<Rational>, pt: &[BigFloat]) -> f64 {
    let d = |p: &MultiPoly<Rational>, i: usize| multi_at(&p.partial(i), pt).to_f64();
    let (fg, ft, qg, qt) = (d(f, 0), d(f, 1), d(q, 0), d(q, 1));
    (fg * qt - ft * qg).abs() / (fg.hypot(ft) * qg.hypot(qt))
}

fn multi_relative(p: &MultiPoly<Rational>, pt: &[BigFloat]) -> f64 {
    let s = multi_scale(p, pt);
    if s.is_zero_value() {
        return 0.0;
    }
    multi_at(p, pt).abs_r().div(&s).map(|r| r.to_f64()).unwrap_or(f64::INFINITY)
}

/// The cusp example: roots of `p`, the closed forms, `X = Y = Z = 2` and the
/// pairing under the involution.
pub fn cusp_verify(prec: usize) -> Result<Report> {
    let d = cusp_data();
    let mut rep = Report::default();
    let pts = cusp_points(prec)?;
    rep.push(Check::exact("cusp.p_positive_roots", &2usize, &pts.len()));
    if pts.len() != 2 {
        return Ok(rep);
    }
    let prod = (pts[0].g.clone() * pts[1].g.clone()).to_f64();
    rep.push(Check::close("cusp.p_roots_reciprocal", 1.0, prod, 1e-20));

    // E and G are solved identically by the closed forms
    let subst = |p: &MultiPoly<Rational>| -> Result<bool> {
        let lift = |u: &UniPoly<Rational>| MultiPoly::from_unipoly(&CUSP_VARS, 0, u);
        let su = lift(&d.s) * lift(&d.u);
        let t0 = lift(&d.r_num) * lift(&d.u);
        let t1 = lift(&d.t) * lift(&d.s);
        // p is linear in t0 and t1: p = a(g) + b(g) t0 + c(g) t1
        let a = p.substitute_value(1, &Rational::zero()).substitute_value(2, &Rational::zero());
        let b = p.partial(1);
        let c = p.partial(2);
        Ok((a * su + b * t0 + c * t1).is_zero())
    };
    rep.push(Check::truth("cusp.E_solved_by_closed_forms", "E(g, R/S, T/U) = 0", "", subst(&d.e)?));
    rep.push(Check::truth("cusp.G_solved_by_closed_forms", "G(g, R/S, T/U) = 0", "", subst(&d.g)?));
    for c in rep.checks.iter_mut().filter(|c| c.computed.is_empty()) {
        c.computed = if c.pass { "identically 0".into() } else { "nonzero".into() };
    }

    let reference = [
        ["0.0212731522", "14.9716642533", "8.4772577609"],
        ["47.0076078738", "0.3184944933", "0.1803379951"],
    ];
    for (k, (pt, pr)) in pts.iter().zip(reference).enumerate() {
        for (name, v, p) in [("g", &pt.g, pr[0]), ("t0", &pt.t0, pr[1]), ("t1", &pt.t1, pr[2])] {
            let (ok, s) = matches_truncated(p, v);
            rep.push(Check::new(format!("cusp.{k}.{name}_reference"), p, s, "1 unit in the last reference digit", ok));
        }
        rep.push(Check::at_most(format!("cusp.{k}.q_residual"), relative_residual(&d.q, &pt.t0), 1e-30));
        rep.push(Check::at_most(format!("cusp.{k}.r_residual"), relative_residual(&d.r, &pt.t1), 1e-30));
        let mp = moduli::derive_data(&pt.t0, &pt.t1, &pt.t6)?;
        rep.push(Check::at_most(format!("cusp.{k}.F_relative"), mp.f_relative(), 1e-30));
        for (n, v) in [("X", &mp.x), ("Y", &mp.y), ("Z", &mp.z)] {
            rep.push(Check::close(format!("cusp.{k}.{n}"), 2.0, v.to_f64(), 1e-8));
        }
        let fe = moduli::feasibility(&mp, 1e-10);
        let count = if fe.in_s { moduli::solve_uvw(&mp, 1e-10)?.len() } else { 0 };
        rep.push(Check::exact(format!("cusp.{k}.count"), &1usize, &count));
    }
    let img = moduli::sigma(&[pts[1].t0.clone(), pts[1].t1.clone(), pts[1].t6.clone()])?;
    let dev = [&pts[0].t0, &pts[0].t1, &pts[0].t6]
        .iter()
        .zip(&img)
        .map(|(a, b)| ((*a).clone() - b.clone()).abs_r().to_f64() / (1.0 + b.to_f64().abs()))
        .fold(0.0, f64::max);
    rep.push(Check::at_most("cusp.sigma_pairing", dev, 1e-9));
    Ok(rep)
}

/// Root value and whether a closed form produced it.
pub type MarkedRoots = Vec<(f64, bool)>;

/// Every isolated positive root of `q` and `r`, with a flag marking the ones
/// produced by the closed forms.
pub fn cusp_root_admissibility(prec: usize) -> Result<(MarkedRoots, MarkedRoots)> {
    let d = cusp_data();
    let pts = cusp_points(prec)?;
    let mark = |p: &UniPoly<Rational>, vals: Vec<&BigFloat>| -> Result<MarkedRoots> {
        let hi = crate::algebra::roots::cauchy_bound(p);
        let lo = Rational::new(One::one(), num_bigint::BigInt::from(1u8) << 64u32);
        Ok(roots_in(p, &lo, &hi, prec)?
            .into_iter()
            .map(|x| {
                let adm = vals.iter().any(|v| ((*v).clone() - x.clone()).abs_r().to_f64() < 1e-20);
                (x.to_f64(), adm)
            })
            .collect())
    };
    Ok((mark(&d.q, pts.iter().map(|p| &p.t0).collect())?, mark(&d.r, pts.iter().map(|p| &p.t1).collect())?))
}

pub const EX5_VARS: [&str; 2] = ["g", "t0"];

/// `F(t0, t0^2/6, t0^4/(216 g))` with its positive factors removed, over
/// `g, t0`.
pub fn example5_poly() -> &'static MultiPoly<Rational> {
    static P: OnceLock<MultiPoly<Rational>> = OnceLock::new();
    P.get_or_init(|| {
        let t: &[(i64, &[u32])] = &[
            (190512, &[4, 6]),
            (20736, &[4, 5]),
            (95256, &[3, 6]),
            (27, &[4, 4]),
            (-205416, &[3, 5]),
            (-401301, &[3, 4]),
            (-104328, &[2, 5]),
            (-6264, &[3, 3]),
            (-59319, &[2, 4]),
            (168282, &[2, 3]),
            (32913, &[1, 4]),
            (202140, &[2, 2]),
            (35388, &[1, 3]),
            (6720, &[1, 2]),
            (2034, &[0, 3]),
            (19504, &[1, 1]),
            (2460, &[0, 2]),
            (688, &[0, 1]),
            (-32, &[0, 0]),
        ];
        MultiPoly::from_int_terms(&EX5_VARS, t)
    })
}

/// `F(t0, t0^2/6, t0^4/(216 g)) * 12694994583552 g^6` as a polynomial in `g, t0`.
pub fn example5_from_f() -> MultiPoly<Rational> {
    let g = MultiPoly::<Rational>::var(&EX5_VARS, "g");
    let t0 = MultiPoly::<Rational>::var(&EX5_VARS, "t0");
    let mut acc = MultiPoly::zero(&EX5_VARS);
    for (c, [a, b, e]) in moduli::F_TERMS {
        // t0^a (t0^2/6)^b (t0^4/(216 g))^e  times (216 g)^6 6^15
        let k = Rational::from_integer((*c).into()) * Rational::from_integer(216.into()).pow(6 - *e as i32)
            * Rational::from_integer(6.into()).pow(15 - *b as i32);
        acc = acc + MultiPoly::constant(&EX5_VARS, k) * t0.pow(a + 2 * b + 4 * e) * g.pow(6 - e);
    }
    acc
}

/// Boundary polynomial of `Z^2 <= 4` restricted to `t1 = t0^2/6`, over `g, t0`.
pub fn example5_z_boundary() -> MultiPoly<Rational> {
    let s3 = &moduli::slack_polys()[2];
    let d6 = s3.degree_in(2).unwrap_or(0);
    let g = MultiPoly::<Rational>::var(&EX5_VARS, "g");
    let t0 = MultiPoly::<Rational>::var(&EX5_VARS, "t0");
    let mut acc = MultiPoly::zero(&EX5_VARS);
    for (e, c) in s3.terms() {
        let (a, b, k) = (e[0], e[1], e[2]);
        let coef = c.clone() / Rational::from_integer(6.into()).pow(b as i32)
            * Rational::from_integer(216.into()).pow((d6 - k) as i32);
        acc = acc + MultiPoly::constant(&EX5_VARS, coef) * t0.pow(a + 2 * b + 4 * k) * g.pow(d6 - k);
    }
    acc.strip_monomial().1
}

/// Common zeros of `p` and `q` inside `[g_lo, g_hi] x [t_lo, t_hi]`, by
/// resultants in each variable and pairing of the isolated roots.
pub fn common_zeros(
    p: &MultiPoly<Rational>,
    q: &MultiPoly<Rational>,
    g_range: (&Rational, &Rational),
    t_range: (&Rational, &Rational),
    prec: usize,
) -> Result<Vec<(BigFloat, BigFloat)>> {
    let uni = |r: MultiPoly<Rational>, i: usize| {
        r.to_unipoly(i).ok_or_else(|| Error::Inconsistent("resultant still depends on the eliminated variable".into()))
    };
    let rt = uni(resultant(p, q, "g")?, 1)?;
    let rg = uni(resultant(p, q, "t0")?, 0)?;
    if rt.is_zero() || rg.is_zero() {
        return Err(Error::Degenerate("the curves share a component".into()));
    }
    let ts = roots_in(&rt, t_range.0, t_range.1, prec)?;
    let gs = roots_in(&rg, g_range.0, g_range.1, prec)?;
    let mut out = Vec::new();
    for t in &ts {
        for g in &gs {
            let pt = [g.clone(), t.clone()];
            if multi_relative(p, &pt) < 1e-20 && multi_relative(q, &pt) < 1e-20 {
                out.push((t.clone(), g.clone()));
            }
        }
    }
    Ok(out)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Checks on the plane curve `f(g, t0)`: tangencies, `Z^2 = 4` contacts, error bound.
pub fn example5_suite(prec: usize) -> Result<Report> {
    let f = example5_poly();
    let mut rep = Report::default();
    let one = [q(1, 1), q(1, 1)];
    let ft = f.partial(1);
    let fg = f.partial(0);
    rep.push(Check::exact("example5.transcription", &true, &proportional(&example5_from_f().strip_monomial().1, &strip_square(f))));
    rep.push(Check::exact("example5.f(1,1)", &q(0, 1), &f.eval(&one)?));
    rep.push(Check::exact("example5.slope", &q(2, 1), &(ft.eval(&one)? / fg.eval(&one)?)));
    let crit = [q(1, 1), q(-2, 3)];
    for (n, p) in [("f", f.clone()), ("f_t0", ft.clone()), ("f_g", fg.clone())] {
        rep.push(Check::exact(format!("example5.{n}(-2/3,1)"), &q(0, 1), &p.eval(&crit)?));
    }
    let gr = (&q(1475, 10000), &q(3, 1));
    let tr = (&q(8, 15), &q(5, 1));
    let horiz = common_zeros(f, &ft, gr, tr, prec)?;
    let expected = [(0.6547026351, 2.9099350324), (4.5794327836, 0.1475263321)];
    rep.push(Check::exact("example5.horizontal_tangencies", &expected.len(), &horiz.len()));
    for (k, (t, g)) in expected.iter().enumerate() {
        let hit = horiz.iter().map(|(a, b)| (a.to_f64(), b.to_f64())).find(|(a, _)| (a - t).abs() < 1e-6);
        let (ct, cg) = hit.unwrap_or((f64::NAN, f64::NAN));
        rep.push(Check::close(format!("example5.tangency{k}.t0"), *t, ct, 1e-8));
        rep.push(Check::close(format!("example5.tangency{k}.g"), *g, cg, 1e-8));
    }
    let vert = common_zeros(f, &fg, gr, tr, prec)?;
    rep.push(Check::exact("example5.vertical_tangencies", &2usize, &vert.len()));

    let zb = example5_z_boundary();
    let hits = common_zeros(f, &zb, gr, tr, prec)?;
    // Every contact with Z^2 = 4 must be a tangency; a second one sits on g = 1.
    for (k, (t, g)) in hits.iter().enumerate() {
        let pt = [g.clone(), t.clone()];
        let cross = gradient_cross(f, &zb, &pt);
        rep.push(Check::at_most(format!("example5.z_contact{k}.tangential"), cross, 1e-15));
    }
    let near = hits.iter().find(|(t, g)| (t.to_f64() - 1.5271772661).abs() < 1e-6 && (g.to_f64() - 0.4663765333).abs() < 1e-6);
    let (t, g) = near.cloned().unwrap_or((BigFloat::zero(prec), BigFloat::zero(prec)));
    rep.push(Check::close("example5.z_tangency.t0", 1.5271772661, t.to_f64(), 1e-8));
    rep.push(Check::close("example5.z_tangency.g", 0.4663765333, g.to_f64(), 1e-8));
    if near.is_some() {
        let six = BigFloat::from_i64(6, prec);
        let t1 = (t.clone() * t.clone()).div(&six).expect("nonzero");
        let t6 = t1.pow(3).div(&(t.clone() * t.clone() * g.clone())).expect("positive");
        let mp = moduli::derive_data(&t, &t1, &t6)?;
        rep.push(Check::close("example5.z_tangency.X", 1.8718004195, mp.x.to_f64(), 1e-8));
        rep.push(Check::close("example5.z_tangency.Y", 1.8718004195, mp.y.to_f64(), 1e-8));
        rep.push(Check::close("example5.z_tangency.Z", 2.0, mp.z.to_f64(), 1e-8));
    }
    let z2 = moduli::derive_rational(&[q(1, 1), q(1, 6), q(1, 216)])?.z2.to_f64();
    rep.push(Check::truth("example5.z2_below_4_at_(1,1)", "< 4", format!("{z2}"), z2 < 4.0));
    let eb = error_bound(4, 6, 3, 5, 1e-20, 0.1475, 8.0 / 15.0, 1.0)?;
    rep.push(Check::exact("example5.error_bound_magnitude", &-17i32, &(eb.log10().floor() as i32)));
    Ok(rep)
}

/// `a = c b` for some nonzero rational `c`.
fn proportional(a: &MultiPoly<Rational>, b: &MultiPoly<Rational>) -> bool {
    match (a.terms().next(), b.terms().next()) {
        (Some((_, ca)), Some((_, cb))) => a.scale(cb) == b.scale(ca),
        _ => a.is_zero() && b.is_zero(),
    }
}

/// `f * (3 g t0 + 2)^2` so that it can be compared with the stripped form of
/// the restriction of `F`.
fn strip_square(f: &MultiPoly<Rational>) -> MultiPoly<Rational> {
    let v = &EX5_VARS;
    let l = MultiPoly::from_int_terms(v, &[(3, &[1, 1]), (2, &[0, 0])]);
    f.clone() * l.pow(2)
}

/// `(C(M, N) + C(I, J)) sup_ratio` with `gamma_n = nh/(1 - nh)` and
/// `C(p, q) = (e^{1/a}-1) gamma_p + (e^{1/c}-1) gamma_q + (e^{1/a}-1)(e^{1/c}-1) gamma_p gamma_q`.
#[allow(clippy::too_many_arguments)]
pub fn error_bound(m: u32, n: u32, i: u32, j: u32, h: f64, a: f64, c: f64, sup_ratio: f64) -> Result<f64> {
    if !(a > 0.0 && c > 0.0) {
        return arg("a and c must be positive");
    }
    if h < 0.0 {
        return arg("h must be nonnegative");
    }
    let gamma = |k: u32| -> Result<f64> {
        let kh = k as f64 * h;
        if kh >= 1.0 {
            return arg(format!("{k} h must be below 1"));
        }
        Ok(kh / (1.0 - kh))
    };
    let ea = (1.0 / a).exp_m1();
    let ec = (1.0 / c).exp_m1();
    let cpq = |p: u32, q: u32| -> Result<f64> {
        let (gp, gq) = (gamma(p)?, gamma(q)?);
        Ok(ea * gp + ec * gq + ea * ec * gp * gq)
    };
    Ok((cpq(m, n)? + cpq(i, j)?) * sup_ratio)
}

/// SHA-256 of the canonical form, used to pin transcriptions.
pub fn canonical_forms() -> Vec<(&'static str, String)> {
    let d = cusp_data();
    let uni = |p: &UniPoly<Rational>, v: &str| {
        MultiPoly::from_unipoly(&[v], 0, p).canonical_string()
    };
    vec![
        ("F", moduli::f_poly().canonical_string()),
        ("W_bracket", moduli::w_bracket_poly().canonical_string()),
        ("S1_branches", moduli::s1_branch_poly().canonical_string()),
        ("cusp.p", uni(&d.p, "g")),
        ("cusp.q", uni(&d.q, "t0")),
        ("cusp.r", uni(&d.r, "t1")),
        ("cusp.E", d.e.canonical_string()),
        ("cusp.G", d.g.canonical_string()),
        ("cusp.R", uni(&d.r_num, "g")),
        ("cusp.S", uni(&d.s, "g")),
        ("cusp.T", uni(&d.t, "g")),
        ("cusp.U", uni(&d.u, "g")),
        ("example5.f", example5_poly().canonical_string()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_bound_examples() {
        assert_eq!(error_bound(4, 6, 3, 5, 0.0, 0.1475, 8.0 / 15.0, 1.0).unwrap(), 0.0);
        let b = error_bound(4, 6, 3, 5, 1e-20, 0.1475, 8.0 / 15.0, 1.0).unwrap();
        assert_eq!(b.log10().floor(), -17.0);
        let b2 = error_bound(4, 6, 3, 5, 2e-20, 0.1475, 8.0 / 15.0, 1.0).unwrap();
        assert!(b2 >= 2.0 * b);
        assert!(error_bound(4, 6, 3, 5, 0.25, 0.1475, 8.0 / 15.0, 1.0).is_err());
    }

    #[test]
    fn cusp_report_passes() {
        for prec in [128, 256] {
            let r = cusp_verify(prec).unwrap();
            assert!(r.passed(), "{prec}: {:#?}", r.failures());
        }
        let r = cusp_verify(200).unwrap();
        assert!(r.passed(), "{:#?}", r.failures());
    }

    #[test]
    fn example5_report_passes() {
        for prec in [128, 200, 256] {
            let r = example5_suite(prec).unwrap();
            assert!(r.passed(), "{prec}: {:#?}", r.failures());
        }
    }

    #[test]
    fn admissible_roots_are_marked() {
        let (qr, rr) = cusp_root_admissibility(200).unwrap();
        assert_eq!(qr.iter().filter(|x| x.1).count(), 2);
        assert_eq!(rr.iter().filter(|x| x.1).count(), 2);
    }
}
