//! Exact decision procedures for real-root location: "only nonpositive
//! zeros", the interlacing relation between root lists, the even/odd
//! (Hermite-Biehler) criterion for half-plane stability, and disc stability
//! via the Möbius change of variables. A floating-point simultaneous-iteration
//! root finder is included as a cross-check; it is never the sole basis of a
//! stability verdict.
//!
//! All exact work happens on primitive integer polynomials: rational inputs
//! are cleared of denominators (which moves no roots), and the Sturm chains
//! are built with sign-true pseudo-remainders so variation counts are exact.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{even_odd_split, mobius_q_to_u, rat, ExactPoly, Rat};

// ---------------------------------------------------------------------------
// integer polynomial layer

/// Primitive integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly(Vec<BigInt>);

impl IPoly {
    fn zero() -> Self {
        IPoly(Vec::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn normalize(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        IPoly(v)
    }

    /// Divides out the integer content, keeping the sign of the leading term.
    fn primitive(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = num_integer::gcd(g, c.clone());
            if g.is_one() {
                return self;
            }
        }
        IPoly(self.0.into_iter().map(|c| c / &g).collect())
    }

    fn neg(&self) -> Self {
        IPoly(self.0.iter().map(|c| -c).collect())
    }

    fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return IPoly::zero();
        }
        IPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of the value at a rational point, computed without divisions.
    fn sign_at(&self, x: &Rat) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        if n.is_zero() {
            return sign_of(&self.0[0]);
        }
        // sign of value * d^deg = sum c_i n^i d^(deg-i), Horner in n
        let deg = self.degree();
        let mut dpow = BigInt::one();
        let mut acc = BigInt::zero();
        for (i, c) in self.0.iter().enumerate().rev() {
            if i == deg {
                acc = c.clone();
            } else {
                dpow = &dpow * d;
                acc = acc * n + c * &dpow;
            }
        }
        sign_of(&acc)
    }

    fn sign_at_neg_inf(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = sign_of(self.leading());
        if self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    fn sign_at_pos_inf(&self) -> i8 {
        if self.is_zero() {
            0
        } else {
            sign_of(self.leading())
        }
    }

    fn mul(&self, other: &IPoly) -> IPoly {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IPoly::normalize(out)
    }

    /// Exact division (panics if not exact); valid for primitive divisors of
    /// primitive dividends per Gauss's lemma.
    fn div_exact(&self, divisor: &IPoly) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let da = self.degree();
        let db = divisor.degree();
        assert!(da >= db, "division of lower degree by higher");
        let mut rem: Vec<Rat> = self.0.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let lead = Rat::from_integer(divisor.leading().clone());
        let mut quot = vec![Rat::zero(); da - db + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] / &lead;
            if !c.is_zero() {
                for (i, dc) in divisor.0.iter().enumerate() {
                    let t = Rat::from_integer(dc.clone()) * &c;
                    rem[k + i] = &rem[k + i] - t;
                }
            }
            quot[k] = c;
        }
        for r in rem.iter() {
            assert!(r.is_zero(), "inexact polynomial division");
        }
        let ints: Vec<BigInt> = quot
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer quotient in exact division");
                c.numer().clone()
            })
            .collect();
        IPoly::normalize(ints)
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Clears denominators and content; the result has the same roots and the
/// same leading-coefficient sign as the input.
fn to_int(p: &ExactPoly) -> IPoly {
    if p.is_zero() {
        return IPoly::zero();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    IPoly::normalize(v).primitive()
}

fn to_exact(p: &IPoly) -> ExactPoly {
    ExactPoly::from_coeffs(p.0.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// True remainder of `a` by `b`, scaled to a primitive integer polynomial
/// with the sign of the rational remainder preserved.
fn signed_prem(a: &IPoly, b: &IPoly) -> IPoly {
    let da = a.degree();
    let db = b.degree();
    if a.is_zero() || da < db {
        return a.clone();
    }
    let steps = da - db + 1;
    let lead = b.leading().clone();
    let mut rem: Vec<BigInt> = a.0.clone();
    // eliminate from the top; each step scales the remainder by lead
    for k in (0..steps).rev() {
        let top = rem[k + db].clone();
        for c in rem.iter_mut().take(k + db) {
            *c = &*c * &lead;
        }
        for (i, bc) in b.0.iter().enumerate().take(db) {
            rem[k + i] -= bc * &top;
        }
        rem[k + db] = BigInt::zero();
    }
    rem.truncate(db);
    let mut out = IPoly::normalize(rem);
    // total scale applied is lead^steps; restore the true sign
    if lead.is_negative() && steps % 2 == 1 {
        out = out.neg();
    }
    out.primitive()
}

/// Sturm chain of a squarefree polynomial (signs exact up to positive scalars).
fn sturm_chain(p: &IPoly) -> Vec<IPoly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive());
    loop {
        let n = chain.len();
        let r = signed_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

enum Place<'a> {
    NegInf,
    At(&'a Rat),
    PosInf,
}

fn variations(chain: &[IPoly], place: Place) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let s = match place {
            Place::NegInf => p.sign_at_neg_inf(),
            Place::At(x) => p.sign_at(x),
            Place::PosInf => p.sign_at_pos_inf(),
        };
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Distinct roots of the (squarefree) chain head in `(lo, hi]`.
fn count_in(chain: &[IPoly], lo: &Rat, hi: &Rat) -> usize {
    variations(chain, Place::At(lo)) - variations(chain, Place::At(hi))
}

fn gcd_int(a: &IPoly, b: &IPoly) -> IPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = signed_prem(&a, &b);
        a = b;
        b = r;
    }
    let out = a.primitive();
    if !out.is_zero() && out.leading().is_negative() {
        out.neg()
    } else {
        out
    }
}

/// Squarefree part `p / gcd(p, p')`.
fn squarefree_part(p: &IPoly) -> IPoly {
    if p.is_zero() || p.degree() == 0 {
        return p.clone();
    }
    let g = gcd_int(p, &p.derivative());
    if g.degree() == 0 {
        p.clone()
    } else {
        p.div_exact(&g).primitive()
    }
}

/// Yun decomposition: pairwise-coprime squarefree factors with multiplicity.
fn squarefree_decomposition(p: &IPoly) -> Vec<(IPoly, usize)> {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return Vec::new();
    }
    let dp = p.derivative();
    let g = gcd_int(p, &dp);
    if g.degree() == 0 {
        return vec![(p.clone().primitive(), 1)];
    }
    let mut out = Vec::new();
    let mut c = p.div_exact(&g).primitive();
    let mut d = {
        let t = dp.div_exact(&g);
        sub_int(&t, &c.derivative())
    };
    let mut i = 1;
    while c.degree() > 0 {
        let a = gcd_int(&c, &d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).primitive();
        let t = d.div_exact(&a);
        d = sub_int(&t, &c.derivative());
        i += 1;
    }
    out
}

fn sub_int(a: &IPoly, b: &IPoly) -> IPoly {
    let n = a.0.len().max(b.0.len());
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.0.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.0.get(i).cloned().unwrap_or_else(BigInt::zero);
        v.push(x - y);
    }
    IPoly::normalize(v)
}

/// Every root lies in `(-bound, bound)`.
fn cauchy_bound(p: &IPoly) -> Rat {
    let lead = Rat::from_integer(p.leading().abs());
    let mut best = Rat::zero();
    for c in &p.0 {
        let r = Rat::from_integer(c.abs()) / &lead;
        if r > best {
            best = r;
        }
    }
    best + rat(1)
}

// ---------------------------------------------------------------------------
// public surface

/// True when the polynomial is identically zero or has a positive leading
/// coefficient.
pub fn is_standard(p: &ExactPoly) -> bool {
    p.leading().is_none_or(|c| c.is_positive())
}

/// True when the polynomial is identically zero, or all of its zeros are
/// real and nonpositive. Decided exactly through a Sturm variation count on
/// the squarefree part.
pub fn only_nonpositive_zeros(p: &ExactPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let ip = to_int(p);
    if ip.degree() == 0 {
        return true;
    }
    let mut sqf = squarefree_part(&ip);
    // roots at the origin are nonpositive; strip the (single) x factor
    if sqf.0[0].is_zero() {
        sqf = IPoly::normalize(sqf.0[1..].to_vec());
    }
    if sqf.degree() == 0 {
        return true;
    }
    let chain = sturm_chain(&sqf);
    let zero = Rat::zero();
    let total = variations(&chain, Place::NegInf) - variations(&chain, Place::At(&zero));
    total == sqf.degree()
}

/// Half-open isolating interval: the root lies in `(lo, hi]`; when
/// `lo == hi` the root is exactly that rational point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// One isolated real root with its multiplicity in the source polynomial.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub interval: RootInterval,
    pub multiplicity: usize,
    factor: usize,
}

/// Isolation of all real roots of a polynomial: disjoint ordered intervals,
/// multiplicities recovered from the squarefree decomposition (kept in
/// `squarefree_chain` so intervals can be refined later).
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub entries: Vec<IsolatedRoot>,
    pub squarefree_chain: Vec<ExactPoly>,
    factors: Vec<IPoly>,
}

impl RootIsolation {
    /// Total number of real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Shrinks every isolating interval below `width`, returning a new value.
    pub fn refine(&self, width: &Rat) -> RootIsolation {
        let mut out = self.clone();
        for entry in &mut out.entries {
            let chain = sturm_chain(&out.factors[entry.factor]);
            refine_interval(&out.factors[entry.factor], &chain, &mut entry.interval, width);
        }
        out
    }
}

fn refine_interval(p: &IPoly, chain: &[IPoly], iv: &mut RootInterval, width: &Rat) {
    while !iv.is_point() && iv.width() > *width {
        let mid = (&iv.lo + &iv.hi) / rat(2);
        if p.sign_at(&mid) == 0 {
            iv.lo = mid.clone();
            iv.hi = mid;
            return;
        }
        if count_in(chain, &iv.lo, &mid) == 1 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
}

/// Isolates the distinct real roots of squarefree `p` into disjoint
/// intervals, ascending.
fn isolate_squarefree(p: &IPoly) -> Vec<RootInterval> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(p);
    let bound = cauchy_bound(p);
    let lo = -&bound;
    let total = count_in(&chain, &lo, &bound);
    let mut out = Vec::new();
    let mut stack = vec![(lo, bound, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        let left = count_in(&chain, &lo, &mid);
        stack.push(((mid).clone(), hi, count - left));
        stack.push((lo, mid, left));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Isolates all real roots of `p` with multiplicities.
pub fn isolate_roots(p: &ExactPoly) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::domain("cannot isolate roots of the zero polynomial"));
    }
    let ip = to_int(p);
    let factors = squarefree_decomposition(&ip);
    let mut entries = Vec::new();
    for (fi, (factor, mult)) in factors.iter().enumerate() {
        for interval in isolate_squarefree(factor) {
            entries.push(IsolatedRoot {
                interval,
                multiplicity: *mult,
                factor: fi,
            });
        }
    }
    // refine until intervals are pairwise disjoint so ordering is meaningful
    let chains: Vec<Vec<IPoly>> = factors.iter().map(|(f, _)| sturm_chain(f)).collect();
    loop {
        entries.sort_by(|a, b| {
            a.interval
                .lo
                .cmp(&b.interval.lo)
                .then(a.interval.hi.cmp(&b.interval.hi))
        });
        let mut overlap = None;
        for i in 0..entries.len().saturating_sub(1) {
            if entries[i].interval.hi > entries[i + 1].interval.lo {
                overlap = Some(i);
                break;
            }
        }
        let Some(i) = overlap else { break };
        for k in [i, i + 1] {
            let fi = entries[k].factor;
            let target = entries[k].interval.width() / rat(4);
            refine_interval(
                &factors[fi].0,
                &chains[fi],
                &mut entries[k].interval,
                &target,
            );
        }
    }
    Ok(RootIsolation {
        entries,
        squarefree_chain: factors.iter().map(|(f, _)| to_exact(f)).collect(),
        factors: factors.into_iter().map(|(f, _)| f).collect(),
    })
}

/// True when every zero is real: the squarefree part has full real root count.
fn all_roots_real(ip: &IPoly) -> bool {
    if ip.degree() == 0 {
        return true;
    }
    let sqf = squarefree_part(ip);
    if sqf.degree() == 0 {
        return true;
    }
    let chain = sturm_chain(&sqf);
    variations(&chain, Place::NegInf) - variations(&chain, Place::PosInf) == sqf.degree()
}

/// Exact test of the root-interleaving relation between `a` and `b`:
/// either `a` interlaces `b` (degree of `b` one higher, zero lists
/// alternating starting from `b`) or `a` alternates left of `b` (equal
/// degrees, zero lists alternating starting from `a`). Zero polynomials
/// relate to everything real-rooted on both sides. Multiplicities count;
/// shared roots are allowed by the non-strict inequalities.
pub fn interlaces(a: &ExactPoly, b: &ExactPoly) -> bool {
    if a.is_zero() && b.is_zero() {
        return true;
    }
    let ia = to_int(a);
    let ib = to_int(b);
    if a.is_zero() {
        return all_roots_real(&ib);
    }
    if b.is_zero() {
        return all_roots_real(&ia);
    }
    if !all_roots_real(&ia) || !all_roots_real(&ib) {
        return false;
    }
    let da = ia.degree();
    let db = ib.degree();
    if !(db == da + 1 || da == db) {
        return false;
    }
    if da == 0 {
        // no zeros of a to order; any arrangement of b's zeros qualifies
        return true;
    }

    // order the union of distinct roots once, then place each root list
    // by slot index; slot comparisons are exact.
    let sa = squarefree_part(&ia);
    let sb = squarefree_part(&ib);
    let g = gcd_int(&sa, &sb);
    let union = if g.degree() == 0 {
        sa.mul(&sb)
    } else {
        sa.mul(&sb.div_exact(&g).primitive())
    };
    // slots are disjoint and ascending
    let slots = isolate_squarefree(&union.primitive());

    let positions_of = |ip: &IPoly| -> Vec<usize> {
        let mut positions = Vec::new();
        for (factor, mult) in squarefree_decomposition(ip) {
            let chain = sturm_chain(&factor);
            for (si, slot) in slots.iter().enumerate() {
                if count_in(&chain, &slot.lo, &slot.hi) == 1 {
                    for _ in 0..mult {
                        positions.push(si);
                    }
                }
            }
        }
        positions.sort_unstable();
        positions
    };

    let ra = positions_of(&ia);
    let rb = positions_of(&ib);
    debug_assert_eq!(ra.len(), da);
    debug_assert_eq!(rb.len(), db);

    if db == da + 1 {
        // b's zeros bracket a's: theta_i <= xi_i <= theta_(i+1)
        (0..da).all(|i| rb[i] <= ra[i] && ra[i] <= rb[i + 1])
    } else {
        // equal degrees: xi_i <= theta_i and theta_i <= xi_(i+1)
        (0..da).all(|i| ra[i] <= rb[i]) && (0..da - 1).all(|i| rb[i] <= ra[i + 1])
    }
}

/// Outcome of a stability decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityStatus {
    QuasiStable,
    Unstable,
}

/// How a stability verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMethod {
    ExactHermiteBiehler,
    ExactSturm,
    Numeric,
}

/// A stability verdict with an explanation on failure.
#[derive(Clone, Debug)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    pub witness: Option<String>,
    pub method: VerdictMethod,
}

impl StabilityVerdict {
    pub fn is_quasi_stable(&self) -> bool {
        self.status == StabilityStatus::QuasiStable
    }

    fn stable(method: VerdictMethod, witness: Option<String>) -> Self {
        StabilityVerdict {
            status: StabilityStatus::QuasiStable,
            witness,
            method,
        }
    }

    fn unstable(method: VerdictMethod, witness: String) -> Self {
        StabilityVerdict {
            status: StabilityStatus::Unstable,
            witness: Some(witness),
            method,
        }
    }
}

/// Exact test that every complex zero of `p` (a polynomial in `u`) has
/// nonpositive real part, through the even/odd splitting criterion:
/// both parts standard with only nonpositive zeros, and the odd part
/// interlacing the even part.
pub fn hermite_biehler(p: &ExactPoly) -> Result<StabilityVerdict> {
    if !is_standard(p) {
        return Err(Error::domain(
            "stability test requires a standard polynomial (positive leading coefficient)",
        ));
    }
    let split = even_odd_split(p);
    let m = VerdictMethod::ExactHermiteBiehler;
    if !is_standard(&split.even) {
        return Ok(StabilityVerdict::unstable(m, format!(
            "even part {} is not standard",
            split.even
        )));
    }
    if !is_standard(&split.odd) {
        return Ok(StabilityVerdict::unstable(m, format!(
            "odd part {} is not standard",
            split.odd
        )));
    }
    if !only_nonpositive_zeros(&split.even) {
        return Ok(StabilityVerdict::unstable(m, format!(
            "even part {} has a zero off the nonpositive real axis",
            split.even
        )));
    }
    if !only_nonpositive_zeros(&split.odd) {
        return Ok(StabilityVerdict::unstable(m, format!(
            "odd part {} has a zero off the nonpositive real axis",
            split.odd
        )));
    }
    if !interlaces(&split.odd, &split.even) {
        return Ok(StabilityVerdict::unstable(m, format!(
            "odd part {} does not interlace even part {}",
            split.odd, split.even
        )));
    }
    Ok(StabilityVerdict::stable(m, None))
}

/// Exact test that every complex zero of `h` (a polynomial in `q`) has
/// modulus at most one. Zeros at `q = 1` sit on the unit circle; they are
/// divided out first and reported, which keeps the half-plane transform
/// degree-exact. `d` is a declared degree bound and is validated only.
pub fn schur_quasi_stable(h: &ExactPoly, d: usize) -> Result<StabilityVerdict> {
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(Error::domain(format!(
            "declared degree bound {d} is below deg = {}",
            h.degree().unwrap()
        )));
    }
    if h.is_zero() {
        return Ok(StabilityVerdict::stable(
            VerdictMethod::ExactHermiteBiehler,
            Some("identically zero polynomial; verdict is trivial".into()),
        ));
    }
    let mut reduced = h.clone();
    let mut boundary = 0usize;
    let q_minus_one = ExactPoly::from_ints(&[-1, 1]);
    while reduced.eval(&rat(1)).is_zero() {
        reduced = reduced.div_exact(&q_minus_one).expect("root at 1 divides");
        boundary += 1;
    }
    let deg = reduced.degree().unwrap_or(0);
    let mut j = mobius_q_to_u(&reduced, deg)?;
    // the transform's leading coefficient is reduced(1) != 0; flip the sign
    // if needed so the half-plane test sees a standard polynomial
    if !is_standard(&j) {
        j = -&j;
    }
    let mut verdict = hermite_biehler(&j)?;
    if boundary > 0 && verdict.is_quasi_stable() {
        verdict.witness = Some(format!(
            "{boundary} zero(s) at q = 1 lie on the unit circle"
        ));
    }
    Ok(verdict)
}

/// One root approximation from the numeric finder.
#[derive(Clone, Copy, Debug)]
pub struct NumericRoot {
    pub value: Complex64,
    pub residual: f64,
}

/// All complex roots by simultaneous Weierstrass iteration on
/// double-precision coefficients. Advisory only: used for cross-checks and
/// bound reporting, never as the sole basis of a quasi-stability verdict.
pub fn numeric_roots(p: &ExactPoly, tol: &Rat) -> Result<Vec<NumericRoot>> {
    if p.is_zero() {
        return Err(Error::domain("zero polynomial has no defined root list"));
    }
    if !tol.is_positive() {
        return Err(Error::domain("tolerance must be positive"));
    }
    let deg = p.degree().unwrap();
    if deg == 0 {
        return Ok(Vec::new());
    }
    let coeffs = p.coeffs_f64();
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let tol = tol.to_f64().unwrap_or(1e-10);
    let scale = 1.0 + monic.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    let cap = 1000;
    for _ in 0..cap {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 1e-12);
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            max_step = max_step.max(step.norm());
        }
        let max_residual = roots.iter().map(|&z| eval(z).norm()).fold(0.0, f64::max);
        if max_step < tol || max_residual < 1e-13 * scale {
            let mut out: Vec<NumericRoot> = roots
                .into_iter()
                .map(|z| NumericRoot {
                    value: z,
                    residual: eval(z).norm() * lead.abs(),
                })
                .collect();
            out.sort_by(|a, b| {
                (a.value.re, a.value.im)
                    .partial_cmp(&(b.value.re, b.value.im))
                    .unwrap()
            });
            return Ok(out);
        }
    }
    Err(Error::inconclusive(format!(
        "root iteration did not converge within {cap} steps"
    )))
}

/// Smallest and largest successive coefficient ratios of a polynomial with
/// strictly positive coefficients. When the ratios are nondecreasing every
/// root modulus lies between the two.
pub fn enestrom_kakeya_bounds(p: &ExactPoly) -> Result<(Rat, Rat)> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::domain("zero polynomial has no coefficient ratios"))?;
    if deg == 0 {
        return Err(Error::domain("constant polynomial has no coefficient ratios"));
    }
    if p.coeffs().iter().any(|c| !c.is_positive()) {
        return Err(Error::domain("all coefficients must be strictly positive"));
    }
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for i in 0..deg {
        let r = p.coeff(i) / p.coeff(i + 1);
        if lo.as_ref().is_none_or(|v| r < *v) {
            lo = Some(r.clone());
        }
        if hi.as_ref().is_none_or(|v| r > *v) {
            hi = Some(r);
        }
    }
    Ok((lo.unwrap(), hi.unwrap()))
}
