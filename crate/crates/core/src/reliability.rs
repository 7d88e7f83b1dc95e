//! All-terminal reliability engines. The deletion/contraction recursion runs
//! on whole spindles (`R = q^c R_del + (1-q^c) R_con`), the H and J
//! polynomials run their own recursions rather than being derived from R,
//! and block decomposition exploits multiplicativity over one-vertex cuts.
//! Closed forms cover thick trees and uniform thick cycles; exhaustive
//! enumeration and Monte Carlo act as independent oracles.



use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly::{
    delta, epsilon, even_odd_split, mobius_q_to_u, rat, s_poly, EvenOddPair, ExactPoly, Rat,
};

/// `1 - q^c`.
fn one_minus_qc(c: usize) -> ExactPoly {
    let mut coeffs = vec![Rat::zero(); c + 1];
    coeffs[0] = Rat::one();
    coeffs[c] = -Rat::one();
    ExactPoly::from_coeffs(coeffs)
}

/// `q^c`.
fn qc(c: usize) -> ExactPoly {
    ExactPoly::monomial(Rat::one(), c)
}

/// `1 + q + ... + q^(c-1)`.
fn geometric(c: usize) -> ExactPoly {
    ExactPoly::from_coeffs(vec![Rat::one(); c])
}

/// `(u+1)^c`.
fn u_plus_one(c: usize) -> ExactPoly {
    ExactPoly::from_ints(&[1, 1]).pow(c as u32)
}

/// `((u+1)^c - (u-1)^c) / 2`.
fn spindle_bracket(c: usize) -> ExactPoly {
    let plus = u_plus_one(c);
    let minus = ExactPoly::from_ints(&[-1, 1]).pow(c as u32);
    (&plus - &minus).scale(&crate::poly::ratio(1, 2))
}

/// Memoizing engine for the three reliability polynomials. The memo keys are
/// canonical renumberings, so structurally repeated subgraphs (which the
/// spindle recursion produces in bulk) are computed once.
#[derive(Default)]
pub struct RelEngine {
    memo_r: HashMap<Vec<u8>, ExactPoly>,
    memo_h: HashMap<Vec<u8>, ExactPoly>,
    memo_j: HashMap<Vec<u8>, ExactPoly>,
}

/// Which quantity a recursion computes; drives the per-spindle weights.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    R,
    H,
    J,
}

impl RelEngine {
    pub fn new() -> Self {
        RelEngine::default()
    }

    /// Probability polynomial in the deletion probability `q` that the
    /// surviving edges span the graph. Zero for disconnected input.
    pub fn reliability(&mut self, g: &Multigraph) -> ExactPoly {
        self.compute(g, Kind::R, true)
    }

    /// Same recursion without the block-decomposition shortcut; used to
    /// cross-check the one-vertex-cut factorization.
    pub fn reliability_raw(&mut self, g: &Multigraph) -> ExactPoly {
        self.compute(g, Kind::R, false)
    }

    /// The reliability with its `(1-q)^(n-1)` factor removed, by its own
    /// recursion. Connected input only.
    pub fn h(&mut self, g: &Multigraph) -> Result<ExactPoly> {
        if !g.is_connected() {
            return Err(Error::domain("H-polynomial needs a connected graph"));
        }
        Ok(self.compute(g, Kind::H, true))
    }

    /// Image of the H-polynomial in the half-plane variable, by its own
    /// recursion. Connected input only.
    pub fn j(&mut self, g: &Multigraph) -> Result<ExactPoly> {
        if !g.is_connected() {
            return Err(Error::domain("J-polynomial needs a connected graph"));
        }
        Ok(self.compute(g, Kind::J, true))
    }

    /// J-polynomial with the convention that disconnected graphs carry the
    /// zero polynomial.
    pub fn j_or_zero(&mut self, g: &Multigraph) -> ExactPoly {
        self.compute(g, Kind::J, true)
    }

    fn compute(&mut self, g: &Multigraph, kind: Kind, split_blocks: bool) -> ExactPoly {
        if !g.is_connected() {
            return ExactPoly::zero();
        }
        if g.vertex_count() <= 1 {
            return ExactPoly::one();
        }
        let key = {
            let mut k = g.memo_key();
            k.push(if split_blocks { 1 } else { 0 });
            k
        };
        let memo = match kind {
            Kind::R => &self.memo_r,
            Kind::H => &self.memo_h,
            Kind::J => &self.memo_j,
        };
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }

        let value = if split_blocks {
            let blocks = g.biconnected_components().expect("connected");
            if blocks.len() > 1 {
                let mut acc = ExactPoly::one();
                for b in &blocks {
                    acc = &acc * &self.compute(b, kind, split_blocks);
                }
                acc
            } else {
                self.spindle_step(g, kind, split_blocks)
            }
        } else {
            self.spindle_step(g, kind, split_blocks)
        };

        let memo = match kind {
            Kind::R => &mut self.memo_r,
            Kind::H => &mut self.memo_h,
            Kind::J => &mut self.memo_j,
        };
        memo.insert(key, value.clone());
        value
    }

    fn spindle_step(&mut self, g: &Multigraph, kind: Kind, split_blocks: bool) -> ExactPoly {
        // prefer a spindle whose deletion keeps the graph connected,
        // keeping the zero branch shallow
        let mut chosen = None;
        for (pair, c) in g.spindles() {
            if !g.is_cut_spindle(pair).expect("spindle exists") {
                chosen = Some((pair, c));
                break;
            }
            if chosen.is_none() {
                chosen = Some((pair, c));
            }
        }
        let (pair, c) = chosen.expect("graph with >= 2 vertices has a spindle");
        let deleted = g.delete_spindle(pair).expect("spindle exists");
        let contracted = g.contract_spindle(pair).expect("spindle exists");
        let del = self.compute(&deleted, kind, split_blocks);
        let con = self.compute(&contracted, kind, split_blocks);
        match kind {
            Kind::R => &(&qc(c) * &del) + &(&one_minus_qc(c) * &con),
            Kind::H => &(&qc(c) * &del) + &(&geometric(c) * &con),
            Kind::J => &(&u_plus_one(c) * &del) + &(&spindle_bracket(c) * &con),
        }
    }

    /// Full per-network report with the cross-checks between the three
    /// polynomials enforced.
    pub fn report(&mut self, g: &Multigraph) -> Result<ReliabilityReport> {
        if !g.is_connected() {
            return Err(Error::domain("report needs a connected graph"));
        }
        let report = ReliabilityReport {
            r: self.reliability(g),
            h: self.h(g)?,
            j: self.j(g)?,
            n: g.vertex_count(),
            m: g.edge_count(),
            d: g.cycle_rank()?,
        };
        report.validate()?;
        Ok(report)
    }
}

/// One-shot helpers over a fresh engine.
pub fn reliability_poly(g: &Multigraph) -> ExactPoly {
    RelEngine::new().reliability(g)
}

pub fn h_poly(g: &Multigraph) -> Result<ExactPoly> {
    RelEngine::new().h(g)
}

pub fn j_poly(g: &Multigraph) -> Result<ExactPoly> {
    RelEngine::new().j(g)
}

/// The three reliability polynomials of a network with their basic shape
/// facts.
#[derive(Clone, Debug)]
pub struct ReliabilityReport {
    pub r: ExactPoly,
    pub h: ExactPoly,
    pub j: ExactPoly,
    pub n: usize,
    pub m: usize,
    pub d: usize,
}

impl ReliabilityReport {
    /// Enforces the structural invariants tying the three polynomials
    /// together: the `(1-q)^(n-1)` factorization, matching degrees bounded
    /// by the cycle rank, unit constant term, nonnegative integer
    /// coefficients, and the change-of-variables identity.
    pub fn validate(&self) -> Result<()> {
        let one_minus_q = ExactPoly::from_ints(&[1, -1]).pow((self.n - 1) as u32);
        if self.r != &one_minus_q * &self.h {
            return Err(Error::domain("R != (1-q)^(n-1) H"));
        }
        if self.h.degree() != self.j.degree() {
            return Err(Error::domain("deg H != deg J"));
        }
        if self.h.degree().is_some_and(|deg| deg > self.d) {
            return Err(Error::domain("deg H exceeds the cycle rank"));
        }
        if self.h.coeff(0) != Rat::one() {
            return Err(Error::domain("H constant term is not 1"));
        }
        for (name, p) in [("H", &self.h), ("J", &self.j)] {
            if !p.is_integral() || !p.has_nonnegative_coeffs() {
                return Err(Error::domain(format!(
                    "{name} must have nonnegative integer coefficients"
                )));
            }
        }
        if self.j != mobius_q_to_u(&self.h, self.d)? {
            return Err(Error::domain("J is not the half-plane image of H"));
        }
        Ok(())
    }

    pub fn j_split(&self) -> EvenOddPair {
        even_odd_split(&self.j)
    }
}

/// Closed-form report for a network whose underlying simple graph is a tree,
/// with spindle sizes `cs`: `R` is the product of `1 - q^c` factors and the
/// J-polynomial is a single even-or-odd component `x^nu * S_{c_1} ... S_{c_k}`.
pub fn closed_form_tree(cs: &[usize]) -> Result<ReliabilityReport> {
    if cs.is_empty() {
        return Err(Error::domain("a tree needs at least one spindle"));
    }
    if cs.contains(&0) {
        return Err(Error::domain("spindle sizes must be >= 1"));
    }
    let n = cs.len() + 1;
    let m: usize = cs.iter().sum();
    let d = m + 1 - n;
    let mut r = ExactPoly::one();
    let mut h = ExactPoly::one();
    let mut s_product = ExactPoly::one();
    let mut even_count = 0usize;
    for &c in cs {
        r = &r * &one_minus_qc(c);
        h = &h * &geometric(c);
        s_product = &s_product * &s_poly(c)?;
        even_count += epsilon(c);
    }
    let nu = even_count / 2;
    let live = s_product.shift_up(nu);
    let pair = if epsilon(n + m) == 0 {
        EvenOddPair {
            even: live,
            odd: ExactPoly::zero(),
        }
    } else {
        EvenOddPair {
            even: ExactPoly::zero(),
            odd: live,
        }
    };
    let report = ReliabilityReport {
        r,
        h,
        j: pair.recombine(),
        n,
        m,
        d,
    };
    report.validate()?;
    Ok(report)
}

/// Comparison of a thick cycle's inert J-component against the scaled tree
/// product form: `constant` is the exact scalar with
/// `component = constant * x^nu * S_{c_1} ... S_{c_n}`, when proportional.
#[derive(Clone, Debug)]
pub struct CycleComponentAudit {
    pub component: ExactPoly,
    pub reference: ExactPoly,
    pub nu: usize,
    pub constant: Option<Rat>,
}

/// Closed-form (uniform multiplicity) or engine-computed report for a
/// network whose underlying simple graph is a cycle, plus the even/odd
/// split of J and the component audit.
pub struct CycleReport {
    pub report: ReliabilityReport,
    pub split: EvenOddPair,
    pub audit: CycleComponentAudit,
}

/// Builds the thick cycle graph with the given spindle sizes.
pub fn cycle_graph(cs: &[usize]) -> Result<Multigraph> {
    if cs.len() < 3 {
        return Err(Error::domain("a cycle needs at least three spindles"));
    }
    let n = cs.len();
    let mut g = Multigraph::new(n);
    for (i, &c) in cs.iter().enumerate() {
        g.add_edges(i, (i + 1) % n, c)?;
    }
    Ok(g)
}

pub fn closed_form_cycle(cs: &[usize]) -> Result<CycleReport> {
    if cs.len() < 3 {
        return Err(Error::domain("a cycle needs at least three spindles"));
    }
    if cs.contains(&0) {
        return Err(Error::domain("spindle sizes must be >= 1"));
    }
    let n = cs.len();
    let m: usize = cs.iter().sum();
    let d = m + 1 - n;
    let uniform = cs.iter().all(|&c| c == cs[0]);
    let report = if uniform {
        let k = cs[0];
        // (1 - q^k)^(n-1) * (1 + (n-1) q^k)
        let mut tail = vec![Rat::zero(); k + 1];
        tail[0] = Rat::one();
        tail[k] = rat((n - 1) as i64);
        let tail = ExactPoly::from_coeffs(tail);
        let r = &one_minus_qc(k).pow((n - 1) as u32) * &tail;
        let h = &geometric(k).pow((n - 1) as u32) * &tail;
        let j = mobius_q_to_u(&h, d)?;
        let report = ReliabilityReport { r, h, j, n, m, d };
        report.validate()?;
        report
    } else {
        RelEngine::new().report(&cycle_graph(cs)?)?
    };
    let split = report.j_split();

    let mut s_product = ExactPoly::one();
    let mut even_count = 0usize;
    for &c in cs {
        s_product = &s_product * &s_poly(c)?;
        even_count += epsilon(c);
    }
    let nu = even_count / 2;
    let reference = s_product.shift_up(nu);
    let component = split.component(delta(n + m)).clone();
    let constant = match component.div_exact(&reference) {
        Ok(q) if q.degree() == Some(0) => Some(q.coeff(0)),
        _ => None,
    };
    Ok(CycleReport {
        report,
        split,
        audit: CycleComponentAudit {
            component,
            reference,
            nu,
            constant,
        },
    })
}

/// Two-vertex-cut reduction: given networks `g` and `h` that will be glued
/// along the pairs `(pg, ph)`, returns the reliability of the union from
/// the four constituent polynomials without ever building the union:
/// `R(G)R(N*) + R(G*)R(N) - R(G)R(N)` where `*` identifies the pair.
pub fn two_cut_reduce(
    g: &Multigraph,
    pg: (usize, usize),
    h: &Multigraph,
    ph: (usize, usize),
) -> Result<ExactPoly> {
    if pg.0 == pg.1 || ph.0 == ph.1 {
        return Err(Error::domain("gluing pairs must be distinct vertices"));
    }
    let mut engine = RelEngine::new();
    let rg = engine.reliability(g);
    let rh = engine.reliability(h);
    let rg_dot = engine.reliability(&g.identify_vertices(pg.0, pg.1)?);
    let rh_dot = engine.reliability(&h.identify_vertices(ph.0, ph.1)?);
    Ok(&(&(&rg * &rh_dot) + &(&rg_dot * &rh)) - &(&rg * &rh))
}

/// Builds the two-vertex gluing of `g` and `h`, identifying `pg` with `ph`
/// pointwise. The inputs keep their own vertex numberings; `h` is shifted.
pub fn glue_two_cut(
    g: &Multigraph,
    pg: (usize, usize),
    h: &Multigraph,
    ph: (usize, usize),
) -> Result<Multigraph> {
    if pg.0 == pg.1 || ph.0 == ph.1 {
        return Err(Error::domain("gluing pairs must be distinct vertices"));
    }
    let off = g.vertex_count();
    let mut u = Multigraph::new(off + h.vertex_count());
    for ((a, b), c) in g.spindles() {
        u.add_edges(a, b, c)?;
    }
    for ((a, b), c) in h.spindles() {
        u.add_edges(a + off, b + off, c)?;
    }
    let first = u.identify_vertices(pg.0, ph.0 + off)?;
    // track ph.1 + off through the first identification
    let gone = pg.0.max(ph.0 + off);
    let adjust = |x: usize| if x > gone { x - 1 } else { x };
    first.identify_vertices(adjust(pg.1), adjust(ph.1 + off))
}

const BRUTE_FORCE_CAP: usize = 20;

/// Ground-truth reliability by exhaustive subset enumeration: sums
/// `(1-q)^(kept) q^(deleted)` over spanning-connected edge subsets.
pub fn brute_force_reliability(g: &Multigraph) -> Result<ExactPoly> {
    brute_force_reliability_capped(g, BRUTE_FORCE_CAP)
}

pub fn brute_force_reliability_capped(g: &Multigraph, cap: usize) -> Result<ExactPoly> {
    let m = g.edge_count();
    if m > cap {
        return Err(Error::refusal(format!(
            "exhaustive enumeration refused: {m} edges exceeds cap {cap}"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for ((a, b), c) in g.spindles() {
        for _ in 0..c {
            edges.push((a, b));
        }
    }
    let n = g.vertex_count();
    let mut counts = vec![0u64; m + 1];
    let mut parent = vec![0usize; n];
    for mask in 0..(1u64 << m) {
        for (v, slot) in parent.iter_mut().enumerate() {
            *slot = v;
        }
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut components = n.max(1);
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let ra = find(&mut parent, a);
                let rb = find(&mut parent, b);
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        if components == 1 {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    let q = ExactPoly::var();
    let one_minus_q = ExactPoly::from_ints(&[1, -1]);
    let mut acc = ExactPoly::zero();
    for (kept, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let term = &one_minus_q.pow(kept as u32) * &q.pow((m - kept) as u32);
        acc = &acc + &term.scale(&rat(count as i64));
    }
    Ok(acc)
}

/// A Monte Carlo estimate of the reliability at a fixed deletion
/// probability.
#[derive(Clone, Debug)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub successes: u64,
    pub trials: u64,
}

/// Unbiased seeded estimate of the reliability at deletion probability `q`:
/// each trial deletes every edge independently and checks spanning
/// connectivity. Edge decisions compare 128-bit uniform draws against an
/// exact rational threshold.
pub fn monte_carlo(g: &Multigraph, q: &Rat, trials: u64, seed: u64) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::domain("at least one trial is required"));
    }
    if q.is_negative() || *q > Rat::one() {
        return Err(Error::domain("deletion probability must lie in [0, 1]"));
    }
    let mut edges = Vec::new();
    for ((a, b), c) in g.spindles() {
        for _ in 0..c {
            edges.push((a, b));
        }
    }
    let n = g.vertex_count();
    // threshold = floor(q * 2^128); delete when draw < threshold
    let threshold: Option<u128> = if q.is_zero() {
        Some(0)
    } else if q.is_one() {
        None // always delete
    } else {
        let scaled = (q.numer().to_biguint().unwrap() << 128u32) / q.denom().to_biguint().unwrap();
        Some(scaled.to_u128().expect("q < 1 scales below 2^128"))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parent = vec![0usize; n.max(1)];
    let mut successes = 0u64;
    for _ in 0..trials {
        for (v, slot) in parent.iter_mut().enumerate() {
            *slot = v;
        }
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut components = n.max(1);
        for &(a, b) in &edges {
            let delete = match threshold {
                None => true,
                Some(0) => false,
                Some(t) => rng.gen::<u128>() < t,
            };
            if !delete {
                let ra = find(&mut parent, a);
                let rb = find(&mut parent, b);
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        if components == 1 {
            successes += 1;
        }
    }
    let estimate = successes as f64 / trials as f64;
    let std_error = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    Ok(MonteCarloEstimate {
        estimate,
        std_error,
        successes,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::glue_at_vertex;
    use crate::poly::ratio;

    fn p(coeffs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(coeffs)
    }

    fn triangle() -> Multigraph {
        Multigraph::with_edges(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap()
    }

    fn thick_cycle(n: usize, k: usize) -> Multigraph {
        cycle_graph(&vec![k; n]).unwrap()
    }

    fn thick_path(cs: &[usize]) -> Multigraph {
        let mut g = Multigraph::new(cs.len() + 1);
        for (i, &c) in cs.iter().enumerate() {
            g.add_edges(i, i + 1, c).unwrap();
        }
        g
    }

    #[test]
    fn engine_matches_closed_forms() {
        let mut e = RelEngine::new();
        // triangle
        assert_eq!(e.reliability(&triangle()), p(&[1, 0, -3, 2]));
        assert_eq!(e.h(&triangle()).unwrap(), p(&[1, 2]));
        assert_eq!(e.j(&triangle()).unwrap(), p(&[1, 3]));
        // doubled edge
        let two = Multigraph::with_edges(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(e.reliability(&two), p(&[1, 0, -1]));
        // doubled path on three vertices
        assert_eq!(e.reliability(&thick_path(&[2, 2])), p(&[1, 0, -1]).pow(2));
        // disconnected input
        let disc = Multigraph::with_edges(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
        assert!(e.reliability(&disc).is_zero());
        assert!(e.h(&disc).is_err());
        // single vertex
        assert_eq!(e.reliability(&Multigraph::new(1)), ExactPoly::one());
    }

    #[test]
    fn report_examples() {
        let mut e = RelEngine::new();
        let rep = e.report(&triangle()).unwrap();
        assert_eq!((rep.n, rep.m, rep.d), (3, 3, 1));
        rep.validate().unwrap();
        let split = rep.j_split();
        assert_eq!(split.even, p(&[1]));
        assert_eq!(split.odd, p(&[3]));

        let rep = e.report(&thick_cycle(3, 2)).unwrap();
        assert_eq!(rep.j, p(&[0, 0, 12, 8, 12]));
        assert_eq!(rep.h, &p(&[1, 1]).pow(2) * &p(&[1, 0, 2]));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_reliability(&triangle()).unwrap(),
            p(&[1, 0, -3, 2])
        );
        let single = Multigraph::with_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(brute_force_reliability(&single).unwrap(), p(&[1, -1]));
        let disc = Multigraph::with_edges(3, &[(0, 1, 1)]).unwrap();
        assert!(brute_force_reliability(&disc).unwrap().is_zero());
        let big = Multigraph::with_edges(2, &[(0, 1, 21)]).unwrap();
        assert!(brute_force_reliability(&big).is_err());
        assert!(brute_force_reliability_capped(&big, 21).is_ok());
    }

    #[test]
    fn closed_form_trees() {
        let rep = closed_form_tree(&[2, 2]).unwrap();
        assert_eq!(rep.r, p(&[1, 0, -1]).pow(2));
        assert_eq!(rep.j, p(&[0, 0, 4]));
        let rep = closed_form_tree(&[1, 1]).unwrap();
        assert_eq!(rep.j, p(&[1]));
        let rep = closed_form_tree(&[3]).unwrap();
        assert_eq!(rep.j, p(&[1, 0, 3]));
        assert!(closed_form_tree(&[]).is_err());
        assert!(closed_form_tree(&[0]).is_err());

        // trees of every shape agree with the engine: only sizes matter
        for cs in [vec![1, 2, 3], vec![2, 4], vec![1, 1, 1, 1], vec![3, 3]] {
            let rep = closed_form_tree(&cs).unwrap();
            let mut e = RelEngine::new();
            let g = thick_path(&cs);
            assert_eq!(rep.r, e.reliability(&g), "{cs:?}");
            assert_eq!(rep.h, e.h(&g).unwrap());
            assert_eq!(rep.j, e.j(&g).unwrap());
            // star with the same sizes
            let mut star = Multigraph::new(cs.len() + 1);
            for (i, &c) in cs.iter().enumerate() {
                star.add_edges(0, i + 1, c).unwrap();
            }
            assert_eq!(rep.r, e.reliability(&star));
        }
    }

    #[test]
    fn closed_form_cycles() {
        let rep = closed_form_cycle(&[1, 1, 1]).unwrap();
        assert_eq!(rep.report.r, p(&[1, 0, -3, 2]));
        assert_eq!(rep.report.j, p(&[1, 3]));
        // audit: live constant is n - 2 against the product form
        assert_eq!(rep.audit.constant, Some(rat(1)));

        let rep = closed_form_cycle(&[1; 5]).unwrap();
        assert_eq!(rep.report.j, p(&[3, 5]));
        assert_eq!(rep.audit.constant, Some(rat(3)));

        let rep = closed_form_cycle(&[1; 4]).unwrap();
        assert_eq!(rep.report.j, p(&[2, 4]));

        let rep = closed_form_cycle(&[2, 2, 2]).unwrap();
        assert_eq!(rep.report.j, p(&[0, 0, 12, 8, 12]));
        // delta-component J1 = 8x; reference x * O2^3 = 8x
        assert_eq!(rep.audit.component, p(&[0, 8]));
        assert_eq!(rep.audit.nu, 1);
        assert_eq!(rep.audit.constant, Some(rat(1)));

        // non-uniform cycles go through the engine
        let rep = closed_form_cycle(&[1, 2, 3]).unwrap();
        let mut e = RelEngine::new();
        assert_eq!(rep.report.r, e.reliability(&cycle_graph(&[1, 2, 3]).unwrap()));
        assert_eq!(rep.audit.constant, Some(rat(1)));

        assert!(closed_form_cycle(&[1, 1]).is_err());
    }

    #[test]
    fn uniform_cycle_closed_form_vs_engine() {
        let mut e = RelEngine::new();
        for n in 3..=5 {
            for k in 1..=2 {
                let rep = closed_form_cycle(&vec![k; n]).unwrap();
                let g = thick_cycle(n, k);
                assert_eq!(rep.report.r, e.reliability(&g), "n={n} k={k}");
                assert_eq!(rep.report.h, e.h(&g).unwrap());
                assert_eq!(rep.report.j, e.j(&g).unwrap());
            }
        }
    }

    #[test]
    fn two_cut_examples() {
        // two 2-edge paths glued at both ends form C4
        let path = thick_path(&[1, 1]);
        let r = two_cut_reduce(&path, (0, 2), &path, (0, 2)).unwrap();
        assert_eq!(r, &p(&[1, -1]).pow(3) * &p(&[1, 3]));
        let glued = glue_two_cut(&path, (0, 2), &path, (0, 2)).unwrap();
        assert_eq!(glued.vertex_count(), 4);
        assert_eq!(glued.edge_count(), 4);
        assert_eq!(reliability_poly(&glued), r);

        // two single edges glued at both endpoints form a doubled edge
        let edge = Multigraph::with_edges(2, &[(0, 1, 1)]).unwrap();
        let r = two_cut_reduce(&edge, (0, 1), &edge, (0, 1)).unwrap();
        assert_eq!(r, p(&[1, 0, -1]));

        // disconnected pieces contribute zero
        let disc = Multigraph::with_edges(3, &[(0, 1, 1)]).unwrap();
        let r = two_cut_reduce(&disc, (0, 2), &edge, (0, 1)).unwrap();
        let glued = glue_two_cut(&disc, (0, 2), &edge, (0, 1)).unwrap();
        assert_eq!(reliability_poly(&glued), r);

        assert!(two_cut_reduce(&edge, (0, 0), &edge, (0, 1)).is_err());
    }

    #[test]
    fn blocks_factor_reliability() {
        let g = glue_at_vertex(&triangle(), 1, &thick_cycle(3, 2), 0);
        let mut e = RelEngine::new();
        let with_blocks = e.reliability(&g);
        let raw = e.reliability_raw(&g);
        assert_eq!(with_blocks, raw);
        let product = &e.reliability(&triangle()) * &e.reliability(&thick_cycle(3, 2));
        assert_eq!(with_blocks, product);
        // H and J factor over one-vertex cuts as well
        assert_eq!(
            e.h(&g).unwrap(),
            &e.h(&triangle()).unwrap() * &e.h(&thick_cycle(3, 2)).unwrap()
        );
        assert_eq!(
            e.j(&g).unwrap(),
            &e.j(&triangle()).unwrap() * &e.j(&thick_cycle(3, 2)).unwrap()
        );
    }

    #[test]
    fn reliability_is_isomorphism_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut e = RelEngine::new();
        for fixture in [
            thick_cycle(4, 2),
            glue_at_vertex(&triangle(), 0, &thick_path(&[2, 1]), 0),
            thick_path(&[3, 1, 2]),
        ] {
            let n = fixture.vertex_count();
            let base = e.reliability(&fixture);
            for _ in 0..6 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let renamed = fixture.renumber(&perm);
                assert_eq!(e.reliability(&renamed), base);
            }
        }
    }

    #[test]
    fn one_cut_split_recursion() {
        // even/odd parts of a one-vertex union: even parts multiply with an
        // x-weighted odd-product correction, odd parts cross-multiply
        let x = ExactPoly::var();
        let mut e = RelEngine::new();
        let cases = [
            (triangle(), thick_cycle(3, 2), 0usize, 1usize),
            (thick_cycle(4, 1), thick_path(&[2]), 2, 0),
            (thick_path(&[3]), thick_path(&[1, 1]), 1, 0),
        ];
        for (g, h, vg, vh) in cases {
            let u = glue_at_vertex(&g, vg, &h, vh);
            let su = even_odd_split(&e.j(&u).unwrap());
            let sg = even_odd_split(&e.j(&g).unwrap());
            let sh = even_odd_split(&e.j(&h).unwrap());
            let even = &(&sg.even * &sh.even) + &(&x * &(&sg.odd * &sh.odd));
            let odd = &(&sg.even * &sh.odd) + &(&sg.odd * &sh.even);
            assert_eq!(su.even, even);
            assert_eq!(su.odd, odd);
        }
    }

    #[test]
    fn spindle_split_recursions() {
        // per-spindle even/odd recursions, with weights depending on the
        // parity of the spindle size
        let x = ExactPoly::var();
        let mut e = RelEngine::new();
        let fixtures = [
            thick_cycle(3, 2),
            thick_cycle(4, 3),
            thick_path(&[2, 3]),
            glue_at_vertex(&thick_cycle(3, 1), 0, &thick_path(&[2]), 0),
        ];
        for g in fixtures {
            let full = even_odd_split(&e.j(&g).unwrap());
            for (pair, c) in g.spindles() {
                let del = g.delete_spindle(pair).unwrap();
                let con = g.contract_spindle(pair).unwrap();
                let sdel = even_odd_split(&e.j_or_zero(&del));
                let scon = even_odd_split(&e.j_or_zero(&con));
                let parts = crate::poly::eo_binomial(c);
                let (ec, oc) = (&parts.even, &parts.odd);
                let (even, odd) = if c % 2 == 0 {
                    (
                        &(&(ec * &sdel.even) + &(&x * &(oc * &sdel.odd)))
                            + &(&x * &(oc * &scon.odd)),
                        &(&(ec * &sdel.odd) + &(oc * &sdel.even)) + &(oc * &scon.even),
                    )
                } else {
                    (
                        &(&(ec * &sdel.even) + &(&x * &(oc * &sdel.odd)))
                            + &(ec * &scon.even),
                        &(&(ec * &sdel.odd) + &(oc * &sdel.even)) + &(ec * &scon.odd),
                    )
                };
                assert_eq!(full.even, even, "even split at spindle {pair:?} of {g}");
                assert_eq!(full.odd, odd, "odd split at spindle {pair:?} of {g}");
            }
        }
    }

    #[test]
    fn nonzero_splits_off_trees() {
        // when the underlying simple graph has a cycle, both J-components
        // are nonzero
        let mut e = RelEngine::new();
        for g in [
            thick_cycle(3, 1),
            thick_cycle(5, 2),
            glue_at_vertex(&thick_cycle(3, 2), 0, &thick_path(&[1]), 0),
        ] {
            let s = even_odd_split(&e.j(&g).unwrap());
            assert!(!s.even.is_zero() && !s.odd.is_zero(), "{g}");
        }
        // trees have exactly one live component
        for cs in [vec![1usize, 1], vec![2, 3], vec![4]] {
            let s = even_odd_split(&e.j(&thick_path(&cs)).unwrap());
            assert!(s.even.is_zero() || s.odd.is_zero());
        }
    }

    #[test]
    fn two_cut_identity_campaign() {
        use rand::{Rng, SeedableRng};
        let mut e = RelEngine::new();
        let one_minus_q = ExactPoly::from_ints(&[1, -1]);
        for seed in 0..200u64 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| -> Multigraph {
                match rng.gen_range(0..4) {
                    0 => thick_path(&[rng.gen_range(1..3), rng.gen_range(1..3)]),
                    1 => thick_cycle(3, rng.gen_range(1..3)),
                    2 => thick_cycle(4, 1),
                    _ => thick_path(&[rng.gen_range(1..4)]),
                }
            };
            let g = pick(&mut rng);
            let h = pick(&mut rng);
            let pg = {
                let a = rng.gen_range(0..g.vertex_count());
                let b = (a + 1 + rng.gen_range(0..g.vertex_count() - 1)) % g.vertex_count();
                (a, b)
            };
            let ph = {
                let a = rng.gen_range(0..h.vertex_count());
                let b = (a + 1 + rng.gen_range(0..h.vertex_count() - 1)) % h.vertex_count();
                (a, b)
            };
            let reduced = two_cut_reduce(&g, pg, &h, ph).unwrap();
            let glued = glue_two_cut(&g, pg, &h, ph).unwrap();
            assert_eq!(reduced, e.reliability(&glued), "seed {seed}");

            if !glued.is_connected() || !g.is_connected() || !h.is_connected() {
                continue;
            }
            // H-level variant of the same reduction (unconditional)
            let hg = e.h(&g).unwrap();
            let hh = e.h(&h).unwrap();
            let hg_dot = e.h(&g.identify_vertices(pg.0, pg.1).unwrap()).unwrap();
            let hh_dot = e.h(&h.identify_vertices(ph.0, ph.1).unwrap()).unwrap();
            let lhs = e.h(&glued).unwrap();
            let rhs =
                &(&(&hg * &hh_dot) + &(&hg_dot * &hh)) - &(&one_minus_q * &(&hg * &hh));
            assert_eq!(lhs, rhs, "H-level reduction at seed {seed}");

            // J-level variant: its degree bookkeeping needs the glued pair
            // to be non-adjacent inside each piece
            if g.multiplicity(pg.0, pg.1) == 0 && h.multiplicity(ph.0, ph.1) == 0 {
                let jg = e.j(&g).unwrap();
                let jh = e.j(&h).unwrap();
                let jg_dot = e.j_or_zero(&g.identify_vertices(pg.0, pg.1).unwrap());
                let jh_dot = e.j_or_zero(&h.identify_vertices(ph.0, ph.1).unwrap());
                let lhs = e.j(&glued).unwrap();
                let rhs = &(&jg * &(&jh + &jh_dot)) + &(&(&jg + &jg_dot) * &jh);
                assert_eq!(lhs, rhs, "J-level reduction at seed {seed}");
            }
        }
    }

    #[test]
    fn monte_carlo_examples() {
        let est = monte_carlo(&triangle(), &ratio(1, 2), 100_000, 7).unwrap();
        // exact value 1/2
        assert!((est.estimate - 0.5).abs() <= 3.0 * est.std_error + 1e-12);
        // determinism
        let again = monte_carlo(&triangle(), &ratio(1, 2), 100_000, 7).unwrap();
        assert_eq!(est.successes, again.successes);

        let zero = monte_carlo(&triangle(), &rat(0), 500, 1).unwrap();
        assert_eq!(zero.successes, 500);
        let one = monte_carlo(&triangle(), &rat(1), 500, 1).unwrap();
        assert_eq!(one.successes, 0);

        assert!(monte_carlo(&triangle(), &rat(2), 10, 1).is_err());
        assert!(monte_carlo(&triangle(), &ratio(1, 2), 0, 1).is_err());
    }
}
