//! Set systems and their rank-generating, H-, and J-polynomials; k-fold
//! expansions; uniform matroids; the Hurwitz coefficient matrix with
//! exhaustive minor tests; coefficient-positivity and disc-stability class
//! membership; alternating-binomial f-vector inequality sums; Tutte
//! evaluations of graphs as a cross-check; and explicit fixture complexes.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly::{binom_rat, ftilde_from_f, h_from_f, j_from_ftilde, rat, ExactPoly, Rat};
use crate::realroot::{schur_quasi_stable, StabilityVerdict};

const GROUND_CAP: usize = 22;
const EXPAND_FACE_CAP: usize = 2_000_000;

/// Default bound on the Hurwitz matrix order for the exhaustive minor test.
pub const MINOR_ORDER_CAP: usize = 8;

/// A set system: a ground set of `m` elements and a collection of faces
/// stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: usize,
    faces: BTreeSet<u64>,
}

impl SetSystem {
    pub fn new(ground: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        if ground > GROUND_CAP {
            return Err(Error::refusal(format!(
                "ground set of {ground} elements exceeds cap {GROUND_CAP}"
            )));
        }
        let mask = if ground == 64 { u64::MAX } else { (1u64 << ground) - 1 };
        let faces: BTreeSet<u64> = faces.into_iter().collect();
        for &f in &faces {
            if f & !mask != 0 {
                return Err(Error::domain("face references an element outside the ground set"));
            }
        }
        Ok(SetSystem { ground, faces })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.contains(&face)
    }

    /// Largest face size, or `None` for a system with no faces.
    pub fn degree(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.count_ones() as usize).max()
    }

    /// Face counts by size, length `degree + 1`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let d = self
            .degree()
            .ok_or_else(|| Error::domain("set system has no faces"))?;
        let mut out = vec![0u64; d + 1];
        for f in &self.faces {
            out[f.count_ones() as usize] += 1;
        }
        Ok(out)
    }

    pub fn f_vector_rat(&self) -> Result<Vec<Rat>> {
        Ok(self.f_vector()?.into_iter().map(|c| rat(c as i64)).collect())
    }

    /// All subsets of size at most `d` of an `m`-element ground set: the
    /// independent sets of the uniform matroid of rank `d`.
    pub fn uniform(m: usize, d: usize) -> Result<SetSystem> {
        if m > GROUND_CAP {
            return Err(Error::refusal("uniform ground set exceeds cap"));
        }
        if d >= m || d < 1 {
            return Err(Error::domain("uniform matroid needs 1 <= d < m"));
        }
        let faces = (0u64..1 << m).filter(|f| f.count_ones() as usize <= d);
        SetSystem::new(m, faces)
    }

    /// Independent sets of the cographic matroid of a connected network:
    /// edge sets whose removal keeps the graph connected. Edges are numbered
    /// by expanding spindles in sorted pair order.
    pub fn cographic(g: &Multigraph) -> Result<SetSystem> {
        if !g.is_connected() {
            return Err(Error::domain("cographic matroid needs a connected graph"));
        }
        let m = g.edge_count();
        if m > 20 {
            return Err(Error::refusal(format!(
                "cographic enumeration refused at {m} edges"
            )));
        }
        let mut edges = Vec::with_capacity(m);
        for ((a, b), c) in g.spindles() {
            for _ in 0..c {
                edges.push((a, b));
            }
        }
        let n = g.vertex_count();
        let mut faces = Vec::new();
        let mut parent = vec![0usize; n.max(1)];
        for mask in 0u64..1 << m {
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
                if mask >> i & 1 == 0 {
                    let ra = find(&mut parent, a);
                    let rb = find(&mut parent, b);
                    if ra != rb {
                        parent[ra] = rb;
                        components -= 1;
                    }
                }
            }
            if components == 1 {
                faces.push(mask);
            }
        }
        SetSystem::new(m, faces)
    }

    /// The k-fold expansion: ground set of `k` copies per element, a face
    /// picking at most one copy of each element of an original face.
    pub fn k_expand(&self, k: usize) -> Result<SetSystem> {
        if k < 1 {
            return Err(Error::domain("expansion factor must be >= 1"));
        }
        if k == 1 {
            return Ok(self.clone());
        }
        if self.ground * k > GROUND_CAP {
            return Err(Error::refusal("expanded ground set exceeds cap"));
        }
        let projected: usize = self
            .faces
            .iter()
            .map(|f| k.pow(f.count_ones()))
            .sum();
        if projected > EXPAND_FACE_CAP {
            return Err(Error::refusal(format!(
                "expansion would create {projected} faces"
            )));
        }
        let mut faces = Vec::with_capacity(projected);
        for &f in &self.faces {
            let elements: Vec<usize> = (0..self.ground).filter(|e| f >> e & 1 == 1).collect();
            let mut stack = vec![(0usize, 0u64)];
            while let Some((i, acc)) = stack.pop() {
                if i == elements.len() {
                    faces.push(acc);
                    continue;
                }
                for copy in 0..k {
                    stack.push((i + 1, acc | 1 << (elements[i] * k + copy)));
                }
            }
        }
        SetSystem::new(self.ground * k, faces)
    }

    /// Direct sum on a disjoint union of ground sets.
    pub fn direct_sum(&self, other: &SetSystem) -> Result<SetSystem> {
        let ground = self.ground + other.ground;
        if ground > GROUND_CAP {
            return Err(Error::refusal("direct sum ground set exceeds cap"));
        }
        let mut faces = Vec::with_capacity(self.faces.len() * other.faces.len());
        for &a in &self.faces {
            for &b in &other.faces {
                faces.push(a | b << self.ground);
            }
        }
        SetSystem::new(ground, faces)
    }

    /// Parses the line-oriented format: `ground <m>` then `face <i> <j> ...`
    /// lines (a bare `face` is the empty face); `#` comments allowed.
    pub fn parse(text: &str) -> Result<SetSystem> {
        let mut ground: Option<usize> = None;
        let mut faces = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = raw.split_whitespace();
            let col_of = |tok: &str| 1 + tok.as_ptr() as usize - raw.as_ptr() as usize;
            let head = tokens.next().unwrap();
            match head {
                "ground" => {
                    if ground.is_some() {
                        return Err(Error::parse(line, col_of(head), "duplicate ground header"));
                    }
                    let tok = tokens.next().ok_or_else(|| {
                        Error::parse(line, col_of(head), "ground needs a count")
                    })?;
                    let m: usize = tok.parse().map_err(|_| {
                        Error::parse(line, col_of(tok), format!("bad element count {tok:?}"))
                    })?;
                    if m > GROUND_CAP {
                        return Err(Error::parse(line, col_of(tok), "ground set too large"));
                    }
                    ground = Some(m);
                }
                "face" => {
                    let m = ground.ok_or_else(|| {
                        Error::parse(line, col_of(head), "face line before ground header")
                    })?;
                    let mut mask = 0u64;
                    for tok in tokens {
                        let e: usize = tok.parse().map_err(|_| {
                            Error::parse(line, col_of(tok), format!("bad element {tok:?}"))
                        })?;
                        if e >= m {
                            return Err(Error::parse(line, col_of(tok), "element out of range"));
                        }
                        mask |= 1 << e;
                    }
                    faces.push(mask);
                }
                other => {
                    return Err(Error::parse(
                        line,
                        col_of(head),
                        format!("unknown directive {other:?}"),
                    ));
                }
            }
        }
        let ground = ground.ok_or_else(|| Error::parse(1, 1, "missing ground header"))?;
        SetSystem::new(ground, faces)
    }

    /// Writes the same line-oriented format, faces ascending.
    pub fn to_text(&self) -> String {
        let mut out = format!("ground {}\n", self.ground);
        for &f in &self.faces {
            out.push_str("face");
            for e in 0..self.ground {
                if f >> e & 1 == 1 {
                    out.push_str(&format!(" {e}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Probability that an independent random subset (each element selected
/// with probability `q`) is a face: `sum_i f_i q^i (1-q)^(m-i)`.
pub fn reliability_setsystem(s: &SetSystem) -> Result<ExactPoly> {
    let f = s.f_vector()?;
    let m = s.ground;
    let q = ExactPoly::var();
    let one_minus_q = ExactPoly::from_ints(&[1, -1]);
    let mut acc = ExactPoly::zero();
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        let term = &q.pow(i as u32) * &one_minus_q.pow((m - i) as u32);
        acc = &acc + &term.scale(&rat(fi as i64));
    }
    Ok(acc)
}

/// H- and J-polynomials of a set system together with its subdegree `t`.
/// The H-polynomial has degree exactly `t` and depends only on the reduced
/// f-vector.
pub fn hj_setsystem(s: &SetSystem) -> Result<(ExactPoly, ExactPoly, usize)> {
    let f = s.f_vector_rat()?;
    let (t, ftilde) = ftilde_from_f(&f)?;
    let h = h_from_f(&ftilde)?;
    let j = j_from_ftilde(&ftilde)?;
    Ok((h, j, t))
}

/// Closed form for the H-polynomial of the uniform matroid of rank `d` on
/// `m` elements: `sum_i C(m-d-1+i, i) q^i`.
pub fn uniform_h(m: usize, d: usize) -> Result<ExactPoly> {
    if d < 1 || d >= m {
        return Err(Error::domain("uniform matroid needs 1 <= d < m"));
    }
    let coeffs = (0..=d).map(|i| binom_rat(m - d - 1 + i, i)).collect();
    Ok(ExactPoly::from_coeffs(coeffs))
}

/// The square coefficient matrix whose total nonnegativity captures the
/// closure of half-plane stability: order `t`, entry `(r, c) = j_{2r-c}`
/// with out-of-range coefficients zero.
#[derive(Clone, Debug)]
pub struct HurwitzMatrix {
    order: usize,
    entries: Vec<Vec<Rat>>,
}

/// Builds the coefficient matrix of a polynomial with positive leading
/// coefficient.
pub fn hurwitz_matrix(j: &ExactPoly) -> Result<HurwitzMatrix> {
    let t = j
        .degree()
        .ok_or_else(|| Error::domain("zero polynomial has no coefficient matrix"))?;
    if !j.leading().unwrap().is_positive() {
        return Err(Error::domain("leading coefficient must be positive"));
    }
    let entry = |r: usize, c: usize| -> Rat {
        let idx = 2 * r as i64 - c as i64;
        if idx < 0 || idx > t as i64 {
            Rat::zero()
        } else {
            j.coeff(idx as usize)
        }
    };
    let entries = (0..t).map(|r| (0..t).map(|c| entry(r, c)).collect()).collect();
    Ok(HurwitzMatrix { order: t, entries })
}

impl HurwitzMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Rat> {
        if rows.len() != cols.len() {
            return Err(Error::domain("minor needs equal row and column counts"));
        }
        let k = rows.len();
        let mut m: Vec<Vec<Rat>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect())
            .collect();
        // exact Gaussian elimination
        let mut det = Rat::one();
        for col in 0..k {
            let pivot = (col..k).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else {
                return Ok(Rat::zero());
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det *= m[col][col].clone();
            let inv = m[col][col].clone();
            for r in (col + 1)..k {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &inv;
                let pivot_row: Vec<Rat> = m[col][col..k].to_vec();
                for (c, pc) in pivot_row.iter().enumerate() {
                    let t = pc * &factor;
                    m[r][col + c] = &m[r][col + c] - t;
                }
            }
        }
        Ok(det)
    }

    /// Exhaustive total-nonnegativity test over every square minor. Refused
    /// above the order cap because the minor count is genuinely exponential.
    pub fn all_minors_nonnegative(&self, order_cap: usize) -> Result<bool> {
        if self.order > order_cap {
            return Err(Error::refusal(format!(
                "minor enumeration refused at order {} (cap {order_cap})",
                self.order
            )));
        }
        for k in 1..=self.order {
            let row_sets = subsets_of_size(self.order, k);
            for rows in &row_sets {
                for cols in &row_sets {
                    if self.minor(rows, cols)?.is_negative() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Membership of a set system in the three nested coefficient classes:
/// nonnegative J-coefficients, total nonnegativity of the coefficient
/// matrix (None when the order cap refuses the enumeration), and exact
/// disc stability of the H-polynomial.
#[derive(Clone, Debug)]
pub struct ClassMembership {
    pub in_jplus: bool,
    pub in_bc_prime: Option<bool>,
    pub in_bc: StabilityVerdict,
}

pub fn class_membership(s: &SetSystem) -> Result<ClassMembership> {
    let (h, j, t) = hj_setsystem(s)?;
    let in_jplus = j.has_nonnegative_coeffs();
    let in_bc_prime = if j.is_zero() {
        Some(true)
    } else {
        match hurwitz_matrix(&j) {
            Ok(m) => match m.all_minors_nonnegative(MINOR_ORDER_CAP) {
                Ok(v) => Some(v),
                Err(Error::Refusal(_)) => None,
                Err(e) => return Err(e),
            },
            // negative leading coefficient cannot be totally nonnegative
            Err(_) => Some(false),
        }
    };
    let in_bc = schur_quasi_stable(&h, t)?;
    Ok(ClassMembership {
        in_jplus,
        in_bc_prime,
        in_bc,
    })
}

/// The alternating binomial sums `sum_{i>=k} C(i,k) (-2)^(d-i) f_i` for
/// `0 <= k <= d`; for a coloop-free matroid these are the J-coefficients
/// and must all be nonnegative.
pub fn fvector_inequality_sums(f: &[Rat], d: usize) -> Vec<Rat> {
    let minus_two = rat(-2);
    (0..=d)
        .map(|k| {
            let mut acc = Rat::zero();
            for i in k..=d {
                let fi = f.get(i).cloned().unwrap_or_else(Rat::zero);
                acc += binom_rat(i, k) * minus_two.clone().pow((d - i) as i32) * fi;
            }
            acc
        })
        .collect()
}

/// Structural checks guarding matroid-only claims: downward closure,
/// the exchange axiom by enumeration, and (for matroids) absence of
/// elements lying in every maximal face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidCheck {
    pub is_complex: bool,
    pub is_matroid: bool,
    pub coloop_free: Option<bool>,
}

pub fn matroid_check(s: &SetSystem) -> MatroidCheck {
    let is_complex = s.faces.contains(&0)
        && s.faces.iter().all(|&f| {
            (0..s.ground).all(|e| f >> e & 1 == 0 || s.faces.contains(&(f & !(1 << e))))
        });
    let is_matroid = is_complex && {
        let faces: Vec<u64> = s.faces.iter().copied().collect();
        faces.iter().all(|&a| {
            faces.iter().all(|&b| {
                if a.count_ones() != b.count_ones() + 1 {
                    return true;
                }
                let extra = a & !b;
                (0..s.ground).any(|e| extra >> e & 1 == 1 && s.faces.contains(&(b | 1 << e)))
            })
        })
    };
    let coloop_free = if is_matroid {
        let mut maximal_intersection = if s.ground == 64 { u64::MAX } else { (1u64 << s.ground) - 1 };
        let maximal: Vec<u64> = s
            .faces
            .iter()
            .copied()
            .filter(|&f| {
                !s.faces
                    .iter()
                    .any(|&g| g != f && g & f == f)
            })
            .collect();
        for f in maximal {
            maximal_intersection &= f;
        }
        Some(maximal_intersection == 0)
    } else {
        None
    };
    MatroidCheck {
        is_complex,
        is_matroid,
        coloop_free,
    }
}

/// Smallest expansion factor `k <= k_max` whose k-fold expansion has a
/// disc-stable H-polynomial, if any.
pub fn find_expansion_threshold(s: &SetSystem, k_max: usize) -> Result<Option<usize>> {
    for k in 1..=k_max {
        let expanded = s.k_expand(k)?;
        let (h, _, t) = hj_setsystem(&expanded)?;
        if schur_quasi_stable(&h, t)?.is_quasi_stable() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Tutte evaluation of graphs

#[derive(Clone)]
struct LoopyGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl LoopyGraph {
    fn connected_ignoring(&self, skip: usize) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == skip || a == b {
                continue;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn contract(&self, idx: usize) -> LoopyGraph {
        let (a, b) = self.edges[idx];
        let keep = a.min(b);
        let gone = a.max(b);
        let remap = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &(u, v))| (remap(u), remap(v)))
            .collect();
        LoopyGraph {
            n: self.n - 1,
            edges,
        }
    }

    fn delete(&self, idx: usize) -> LoopyGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &e)| e)
            .collect();
        LoopyGraph {
            n: self.n,
            edges,
        }
    }
}

fn tutte_rec(g: &LoopyGraph, x: &Rat, y: &Rat) -> Rat {
    // find an edge that is neither a loop nor a bridge
    for idx in 0..g.edges.len() {
        let (a, b) = g.edges[idx];
        if a == b {
            continue;
        }
        if g.connected_ignoring(idx) {
            let del = tutte_rec(&g.delete(idx), x, y);
            let con = tutte_rec(&g.contract(idx), x, y);
            return del + con;
        }
    }
    // only loops and bridges remain
    let loops = g.edges.iter().filter(|&&(a, b)| a == b).count();
    let bridges = g.edges.len() - loops;
    x.clone().pow(bridges as i32) * y.clone().pow(loops as i32)
}

/// Tutte polynomial of a connected multigraph evaluated at a rational
/// point, by deletion/contraction with loops contributing `y` and bridges
/// `x`.
pub fn tutte_eval(g: &Multigraph, x: &Rat, y: &Rat) -> Result<Rat> {
    if !g.is_connected() {
        return Err(Error::domain("Tutte evaluation needs a connected graph"));
    }
    if g.edge_count() > 16 {
        return Err(Error::refusal("Tutte recursion refused above 16 edges"));
    }
    let mut edges = Vec::new();
    for ((a, b), c) in g.spindles() {
        for _ in 0..c {
            edges.push((a, b));
        }
    }
    Ok(tutte_rec(
        &LoopyGraph {
            n: g.vertex_count(),
            edges,
        },
        x,
        y,
    ))
}

// ---------------------------------------------------------------------------
// fixtures

/// The face complex of the icosahedron: 12 vertices, 30 edges, 20 triangles,
/// closed downward.
pub fn icosahedron_complex() -> SetSystem {
    // vertex layout: 0 apex, 1..=5 upper ring, 6..=10 lower ring, 11 apex
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(20);
    for i in 0..5 {
        triangles.push([0, up(i), up(i + 1)]);
        triangles.push([up(i), up(i + 1), lo(i)]);
        triangles.push([lo(i), lo(i + 1), up(i + 1)]);
        triangles.push([11, lo(i), lo(i + 1)]);
    }
    let mut faces = BTreeSet::new();
    for t in triangles {
        let mask = t.iter().fold(0u64, |m, &v| m | 1 << v);
        // downward closure of each triangle
        let mut sub = mask;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }
    SetSystem::new(12, faces).expect("valid complex")
}

/// The broken-circuit complex of the graphic matroid of the complete
/// bipartite graph on parts of sizes 2 and 3, with edges ordered
/// lexicographically: subsets of the six edges containing no circuit
/// minus its least element.
pub fn k23_broken_circuit_complex() -> SetSystem {
    // edges 0..6 = (a,x),(a,y),(a,z),(b,x),(b,y),(b,z); the three
    // four-cycles minus their least edges give the broken circuits
    let broken: [u64; 3] = [
        1 << 1 | 1 << 3 | 1 << 4,
        1 << 2 | 1 << 3 | 1 << 5,
        1 << 2 | 1 << 4 | 1 << 5,
    ];
    let faces = (0u64..1 << 6).filter(|f| broken.iter().all(|&b| f & b != b));
    SetSystem::new(6, faces).expect("valid complex")
}

/// Direct sum of `d` two-element one-circuits: rank-generating function
/// `(1+2z)^d`, the equality case of the f-vector inequalities.
pub fn two_circuit_sum(d: usize) -> Result<SetSystem> {
    if d == 0 {
        return Err(Error::domain("need at least one summand"));
    }
    let pair = SetSystem::new(2, [0b00, 0b01, 0b10])?;
    let mut acc = pair.clone();
    for _ in 1..d {
        acc = acc.direct_sum(&pair)?;
    }
    Ok(acc)
}
