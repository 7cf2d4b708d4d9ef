//! Graph energy: certified enclosures from the exact characteristic
//! polynomial, and a Coulson-integral estimate for cross-checking.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::{b_sequence, charpoly_oracle, ORACLE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::bigint_to_f64;
use crate::quadrature::integrate;
use crate::sturm::{degree, isolate_roots, squarefree_decomposition, Dyadic, RootInterval, ZPoly};

pub const DEFAULT_TOL: f64 = 1e-9;
/// Refinement rounds before giving up with `ToleranceUnreachable`.
pub const MAX_ROUNDS: usize = 4000;
const QUADRATURE_PIECES: usize = 20_000;

/// Which polynomial the roots were isolated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `Σ (-1)^i b_{2i} μ^{m-i}` in `μ = λ²` (bipartite graphs only).
    Squared,
    /// The characteristic polynomial itself.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyEnclosure {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub route: Route,
}

impl EnergyEnclosure {
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn method(&self) -> &'static str {
        "sturm"
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    /// Largest `f64` not above `lo`.
    pub fn lo_f64(&self) -> f64 {
        f64_below(&self.lo.to_rational())
    }

    /// Smallest `f64` not below `hi`.
    pub fn hi_f64(&self) -> f64 {
        f64_above(&self.hi.to_rational())
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }
}

impl fmt::Display for EnergyEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}]", self.lo_f64(), self.hi_f64())
    }
}

fn f64_below(r: &BigRational) -> f64 {
    let x = num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
    match BigRational::from_f64(x) {
        Some(q) if &q > r => x.next_down(),
        _ => x,
    }
}

fn f64_above(r: &BigRational) -> f64 {
    let x = num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN);
    match BigRational::from_f64(x) {
        Some(q) if &q < r => x.next_up(),
        _ => x,
    }
}

struct Factor {
    poly: ZPoly,
    mult: i64,
    roots: Vec<RootInterval>,
}

/// Isolated spectrum of one graph, refinable in place.
pub struct CertifiedEnergy {
    route: Route,
    factors: Vec<Factor>,
    rounds: usize,
}

impl CertifiedEnergy {
    /// Isolates the nonzero spectrum, through the squared polynomial when the
    /// graph is bipartite.
    pub fn new(g: &Graph) -> Result<Self> {
        let route = if g.is_bipartite() {
            Route::Squared
        } else {
            Route::Full
        };
        Self::with_route(g, route)
    }

    pub fn with_route(g: &Graph, route: Route) -> Result<Self> {
        if g.order() > ORACLE_LIMIT {
            return Err(Error::TooLarge {
                order: g.order(),
                limit: ORACLE_LIMIT,
            });
        }
        let phi = charpoly_oracle(g)?;
        let delta = g.max_degree() as u64;
        let (poly, bound_int): (ZPoly, u64) = match route {
            Route::Squared => {
                let b = b_sequence(&phi, g.is_bipartite())?;
                (b.squared_poly_ascending(), delta * delta)
            }
            Route::Full => (phi.coeffs().iter().rev().cloned().collect(), delta),
        };
        // Strictly above the largest root: spectral radius ≤ Δ.
        let bound = Dyadic::new(BigInt::one() << (64 - bound_int.leading_zeros()), 0);
        let zeros = poly.iter().take_while(|c| c.is_zero()).count();
        let stripped: ZPoly = poly[zeros.min(poly.len() - 1)..].to_vec();
        let factors = if degree(&stripped) == 0 {
            Vec::new()
        } else {
            squarefree_decomposition(&stripped)
                .into_iter()
                .map(|(p, m)| {
                    let zero = Dyadic::from_int(0);
                    let mut roots = Vec::new();
                    if route == Route::Full {
                        roots.extend(isolate_roots(&p, &bound.neg(), &zero));
                    }
                    roots.extend(isolate_roots(&p, &zero, &bound));
                    Factor {
                        poly: p,
                        mult: m as i64,
                        roots,
                    }
                })
                .collect()
        };
        Ok(CertifiedEnergy {
            route,
            factors,
            rounds: 0,
        })
    }

    pub fn route(&self) -> Route {
        self.route
    }

    /// Number of distinct nonzero eigenvalues (or squared eigenvalues).
    pub fn distinct_roots(&self) -> usize {
        self.factors.iter().map(|f| f.roots.len()).sum()
    }

    /// Contribution bounds of one root interval to the energy.
    fn contribution(&self, iv: &RootInterval, mult: i64, prec: u32) -> (Dyadic, Dyadic) {
        match self.route {
            Route::Squared => (
                iv.lo.sqrt_floor(prec).mul_int(2 * mult),
                iv.hi.sqrt_ceil(prec).mul_int(2 * mult),
            ),
            Route::Full => {
                if iv.hi.is_negative() || iv.hi.is_zero() {
                    (iv.hi.neg().mul_int(mult), iv.lo.neg().mul_int(mult))
                } else {
                    (iv.lo.mul_int(mult), iv.hi.mul_int(mult))
                }
            }
        }
    }

    fn bounds(&self, prec: u32) -> (Dyadic, Dyadic, Vec<Vec<Dyadic>>) {
        let mut lo = Dyadic::from_int(0);
        let mut hi = Dyadic::from_int(0);
        let mut widths = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            let mut w = Vec::with_capacity(f.roots.len());
            for iv in &f.roots {
                let (a, b) = self.contribution(iv, f.mult, prec);
                w.push(b.sub(&a));
                lo = lo.add(&a);
                hi = hi.add(&b);
            }
            widths.push(w);
        }
        (lo, hi, widths)
    }

    /// Refines until the enclosure width is at most `tol`.
    pub fn refine_to(&mut self, tol: f64) -> Result<EnergyEnclosure> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::BadParam(format!("tolerance must be positive, got {tol}")));
        }
        let tol_q = BigRational::from_f64(tol).expect("finite tolerance");
        let count = self.distinct_roots().max(1);
        // Square-root rounding costs at most 2^-prec per bound.
        let prec = (64 - (count as u64).leading_zeros()) + (-tol.log2()).ceil().max(0.0) as u32 + 16;
        let share = &tol_q / BigRational::from_integer(BigInt::from(2 * count as i64));
        loop {
            let (lo, hi, widths) = self.bounds(prec);
            if hi.sub(&lo).to_rational() <= tol_q {
                return Ok(EnergyEnclosure {
                    lo,
                    hi,
                    route: self.route,
                });
            }
            if self.rounds >= MAX_ROUNDS {
                return Err(Error::ToleranceUnreachable(self.rounds));
            }
            self.rounds += 1;
            self.factors
                .par_iter_mut()
                .zip(widths.par_iter())
                .for_each(|(f, ws)| {
                    for (iv, w) in f.roots.iter_mut().zip(ws) {
                        if w.to_rational() > share {
                            for _ in 0..4 {
                                iv.bisect(&f.poly);
                            }
                        }
                    }
                });
        }
    }
}

/// Certified enclosure of `E(G)` with width at most `tol`.
pub fn energy_certified(g: &Graph, tol: f64) -> Result<EnergyEnclosure> {
    CertifiedEnergy::new(g)?.refine_to(tol)
}

/// Same as [`energy_certified`] but always isolates roots of the full
/// characteristic polynomial.
pub fn energy_certified_full(g: &Graph, tol: f64) -> Result<EnergyEnclosure> {
    CertifiedEnergy::with_route(g, Route::Full)?.refine_to(tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnergyOrder {
    Less,
    Greater,
    Undecided,
}

impl fmt::Display for EnergyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyOrder::Less => "Less",
            EnergyOrder::Greater => "Greater",
            EnergyOrder::Undecided => "Undecided",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EnergyComparison {
    pub order: EnergyOrder,
    pub e1: EnergyEnclosure,
    pub e2: EnergyEnclosure,
}

/// Refines both enclosures (widths 1e-3, then /16 per round) until they are
/// disjoint, or both are narrower than `gap_tol / 4` without separating.
pub fn energy_compare(g1: &Graph, g2: &Graph, gap_tol: f64) -> Result<EnergyComparison> {
    if !(gap_tol > 0.0 && gap_tol.is_finite()) {
        return Err(Error::BadParam(format!("gap tolerance must be positive, got {gap_tol}")));
    }
    let (c1, c2) = rayon::join(|| CertifiedEnergy::new(g1), || CertifiedEnergy::new(g2));
    let (mut c1, mut c2) = (c1?, c2?);
    let floor = gap_tol / 4.0;
    let mut tol = 1e-3_f64.max(floor);
    loop {
        let (e1, e2) = rayon::join(|| c1.refine_to(tol), || c2.refine_to(tol));
        let (e1, e2) = (e1?, e2?);
        let order = if e1.hi < e2.lo {
            Some(EnergyOrder::Less)
        } else if e1.lo > e2.hi {
            Some(EnergyOrder::Greater)
        } else if tol <= floor {
            Some(EnergyOrder::Undecided)
        } else {
            None
        };
        if let Some(order) = order {
            return Ok(EnergyComparison { order, e1, e2 });
        }
        tol = (tol / 16.0).max(floor);
    }
}

/// `S(x) = Π (1 + λ_k² x²)` as coefficients of `x^{2j}`, with the prefactor
/// of the Coulson integral `c ∫_0^∞ x^{-2} ln S(x) dx` (after folding the
/// bipartite square root into `c`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoulsonForm {
    Bipartite,
    General,
}

fn coulson_series(g: &Graph, form: CoulsonForm) -> Result<(Vec<f64>, f64)> {
    let phi = charpoly_oracle(g)?;
    match form {
        CoulsonForm::Bipartite => {
            let b = b_sequence(&phi, g.is_bipartite())?;
            Ok((b.b.iter().map(bigint_to_f64).collect(), 2.0 / std::f64::consts::PI))
        }
        CoulsonForm::General => {
            let n = phi.degree();
            // F = Σ (-1)^i a_{2i} x^{2i}, G = Σ (-1)^i a_{2i+1} x^{2i+1}.
            let mut f = vec![BigInt::zero(); n + 1];
            let mut gg = vec![BigInt::zero(); n + 1];
            for k in 0..=n {
                let a = phi.a(k);
                let signed = if (k / 2) % 2 == 0 { a } else { -a };
                if k % 2 == 0 {
                    f[k] = signed;
                } else {
                    gg[k] = signed;
                }
            }
            let mut s = vec![BigInt::zero(); 2 * n + 1];
            for i in 0..=n {
                for j in 0..=n {
                    s[i + j] += &f[i] * &f[j] + &gg[i] * &gg[j];
                }
            }
            debug_assert!(s.iter().skip(1).step_by(2).all(|c| c.is_zero()));
            let even: Vec<f64> = s.iter().step_by(2).map(bigint_to_f64).collect();
            Ok((even, 1.0 / std::f64::consts::PI))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoulsonEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub form: CoulsonForm,
}

/// Coulson-integral estimate with the bipartite form when it applies.
pub fn coulson_energy(g: &Graph, target_err: f64) -> Result<CoulsonEstimate> {
    let form = if g.is_bipartite() {
        CoulsonForm::Bipartite
    } else {
        CoulsonForm::General
    };
    coulson_energy_form(g, target_err, form)
}

/// Splits `∫_0^∞` at 1. On `[0,1]` the integrand `ln S(x)/x²` tends to `s_1`
/// at 0. On `[1,∞)` the substitution `x = 1/t` gives
/// `∫_0^1 ln(Σ s_j t^{2(r-j)}) dt + 2r` where `r = deg S / 2`.
pub fn coulson_energy_form(g: &Graph, target_err: f64, form: CoulsonForm) -> Result<CoulsonEstimate> {
    if !(target_err > 0.0 && target_err.is_finite()) {
        return Err(Error::BadParam(format!("target error must be positive, got {target_err}")));
    }
    let (mut s, c) = coulson_series(g, form)?;
    while s.len() > 1 && s.last() == Some(&0.0) {
        s.pop();
    }
    let r = s.len() - 1;
    if r == 0 {
        return Ok(CoulsonEstimate {
            value: 0.0,
            error_estimate: 0.0,
            form,
        });
    }
    let head = |x: f64| {
        let x2 = x * x;
        // S(x) - 1 = x² Σ_{j≥1} s_j x^{2(j-1)}
        let inner = s[1..].iter().rev().fold(0.0, |acc, &sj| acc * x2 + sj);
        if x2 == 0.0 {
            inner
        } else {
            (x2 * inner).ln_1p() / x2
        }
    };
    let tail = |t: f64| {
        let t2 = t * t;
        s.iter().fold(0.0, |acc, &sj| acc * t2 + sj).ln()
    };
    let part = target_err / (4.0 * c);
    let i1 = integrate(head, 0.0, 1.0, part, QUADRATURE_PIECES);
    let i2 = integrate(tail, 0.0, 1.0, part, QUADRATURE_PIECES);
    let estimate = c * (i1.error + i2.error);
    if estimate > target_err || !estimate.is_finite() {
        return Err(Error::QuadratureFailure {
            estimate,
            target: target_err,
        });
    }
    Ok(CoulsonEstimate {
        value: c * (i1.value + 2.0 * r as f64 + i2.value),
        error_estimate: estimate,
        form,
    })
}

/// The JSON line emitted for one energy computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub spec: String,
    pub energy_lo: f64,
    pub energy_hi: f64,
    pub method: String,
}

impl EnergyReport {
    pub fn certified(spec: impl Into<String>, e: &EnergyEnclosure) -> Self {
        EnergyReport {
            spec: spec.into(),
            energy_lo: e.lo_f64(),
            energy_hi: e.hi_f64(),
            method: e.method().into(),
        }
    }

    pub fn coulson(spec: impl Into<String>, c: &CoulsonEstimate) -> Self {
        EnergyReport {
            spec: spec.into(),
            energy_lo: c.value - c.error_estimate,
            energy_hi: c.value + c.error_estimate,
            method: "coulson".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, p_n_a, path, star, theta_i, theta_ii};

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn k2_is_exact() {
        let e = energy_certified(&path(2).unwrap(), 1e-9).unwrap();
        assert_eq!(e.lo, Dyadic::from_int(2));
        assert_eq!(e.hi, Dyadic::from_int(2));
    }

    #[test]
    fn hexagon_contains_eight() {
        let e = energy_certified(&cycle(6).unwrap(), 1e-9).unwrap();
        assert!(e.contains(&rat(8)));
        assert!(e.width().to_f64() <= 1e-9);
        assert_eq!(e.route, Route::Squared);
        let full = energy_certified_full(&cycle(6).unwrap(), 1e-9).unwrap();
        assert!(full.contains(&rat(8)));
    }

    #[test]
    fn cycles_match_closed_form() {
        for n in 3..=16 {
            let exact: f64 = (0..n)
                .map(|j| (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos().abs() * 2.0)
                .sum();
            let e = energy_certified(&cycle(n).unwrap(), 1e-10).unwrap();
            assert!(e.lo_f64() - 1e-12 <= exact && exact <= e.hi_f64() + 1e-12, "C_{n}: {e} vs {exact}");
        }
    }

    #[test]
    fn stars_and_empty() {
        // E(K_{1,n-1}) = 2 sqrt(n-1)
        let e = energy_certified(&star(10).unwrap(), 1e-12).unwrap();
        assert!((e.midpoint_f64() - 6.0).abs() < 1e-12);
        let e = energy_certified(&Graph::empty(5), 1e-9).unwrap();
        assert!(e.lo.is_zero() && e.hi.is_zero());
    }

    #[test]
    fn squared_and_full_routes_agree() {
        let graphs = [
            theta_ii(20, 6, 6, 6, 3, 2, 2).unwrap(),
            theta_i(20, 6, 6, 6, 3, 3, 2).unwrap(),
            p_n_a(10, 6).unwrap(),
        ];
        for g in &graphs {
            let a = energy_certified(g, 1e-9).unwrap();
            let b = energy_certified_full(g, 1e-9).unwrap();
            assert!(a.lo <= b.hi && b.lo <= a.hi);
        }
    }

    #[test]
    fn additive_over_components() {
        let g1 = cycle(6).unwrap();
        let g2 = p_n_a(9, 4).unwrap();
        let u = g1.disjoint_union(&g2);
        let tol = 1e-9;
        let (e1, e2, eu) = (
            energy_certified(&g1, tol).unwrap(),
            energy_certified(&g2, tol).unwrap(),
            energy_certified(&u, tol).unwrap(),
        );
        let sum = e1.midpoint_f64() + e2.midpoint_f64();
        assert!((eu.midpoint_f64() - sum).abs() <= 2.0 * tol);
    }

    #[test]
    fn odd_graph_uses_full_route() {
        let k3 = cycle(3).unwrap();
        let e = energy_certified(&k3, 1e-9).unwrap();
        assert_eq!(e.route, Route::Full);
        assert!(e.contains(&rat(4)));
    }

    #[test]
    fn coulson_small_cases() {
        let c = coulson_energy(&path(2).unwrap(), 1e-8).unwrap();
        assert!((c.value - 2.0).abs() < 1e-6);
        let c = coulson_energy(&cycle(6).unwrap(), 1e-8).unwrap();
        assert!((c.value - 8.0).abs() < 1e-4);
        let c = coulson_energy_form(&cycle(6).unwrap(), 1e-8, CoulsonForm::General).unwrap();
        assert!((c.value - 8.0).abs() < 1e-4);
        let c = coulson_energy(&cycle(5).unwrap(), 1e-8).unwrap();
        let exact = 2.0 + 4.0 * (2.0 * std::f64::consts::PI / 5.0).cos().abs()
            + 4.0 * (4.0 * std::f64::consts::PI / 5.0).cos().abs();
        assert!((c.value - exact).abs() < 1e-6);
    }

    #[test]
    fn coulson_matches_certified() {
        let g = p_n_a(10, 6).unwrap();
        let c = coulson_energy(&g, 1e-8).unwrap();
        let e = energy_certified(&g, 1e-9).unwrap();
        assert!((c.value - e.midpoint_f64()).abs() < 1e-4);
    }

    #[test]
    fn compare_examples() {
        let r = energy_compare(&cycle(8).unwrap(), &p_n_a(8, 6).unwrap(), 1e-6).unwrap();
        assert_eq!(r.order, EnergyOrder::Less);
        let g = theta_ii(20, 6, 6, 6, 3, 2, 2).unwrap();
        let r = energy_compare(&g, &g, 1e-4).unwrap();
        assert_eq!(r.order, EnergyOrder::Undecided);
        let r = energy_compare(&p_n_a(8, 6).unwrap(), &cycle(8).unwrap(), 1e-6).unwrap();
        assert_eq!(r.order, EnergyOrder::Greater);
    }

    #[test]
    fn bad_tolerances() {
        let g = path(3).unwrap();
        assert!(matches!(energy_certified(&g, 0.0), Err(Error::BadParam(_))));
        assert!(matches!(coulson_energy(&g, -1.0), Err(Error::BadParam(_))));
        assert!(matches!(
            energy_certified(&path(65).unwrap(), 1e-3),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn report_rounds_outward() {
        let e = energy_certified(&cycle(6).unwrap(), 1e-9).unwrap();
        let r = EnergyReport::certified("cycle:6", &e);
        assert!(r.energy_lo <= 8.0 && 8.0 <= r.energy_hi);
        assert_eq!(r.method, "sturm");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["spec"], "cycle:6");
    }
}
