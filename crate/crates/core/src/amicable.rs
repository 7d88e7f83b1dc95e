//! Vertex-pair compatibility layer: for a pair `{v, w}` of a network, build
//! the deletion graph (all `v`-`w` edges removed) and the identification
//! graph (`v` and `w` merged), split their J-polynomials into even/odd
//! parts, and test the interpolatory squares those parts must form. A
//! counterexample scanner runs the check across whole graph families and
//! verifies the exact interlacing consequence on every pass.

use crate::cube::{cube_falsify, CubeVerdict, PolyCube};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly::{even_odd_split, EvenOddPair, ExactPoly};
use crate::realroot::{interlaces, schur_quasi_stable};
use crate::reliability::RelEngine;

/// Everything the pair checks need about one `(graph, vertex pair)`: the
/// multiplicity joining the pair, the two derived J-polynomials, and their
/// even/odd splits. `j_minus` is identically zero exactly when deleting the
/// pair's edges disconnects the graph; `j_bullet` never vanishes for
/// connected input.
#[derive(Clone, Debug)]
pub struct CutPairContext {
    pub base: Multigraph,
    pub pair: (usize, usize),
    pub a: usize,
    pub j_minus: ExactPoly,
    pub j_bullet: ExactPoly,
    pub minus_split: EvenOddPair,
    pub bullet_split: EvenOddPair,
}

/// Builds the context for a vertex pair, reusing the given engine's memo.
/// With no edges between the pair the deletion graph is the graph itself.
pub fn cut_pair_context(
    engine: &mut RelEngine,
    g: &Multigraph,
    v: usize,
    w: usize,
) -> Result<CutPairContext> {
    if v == w {
        return Err(Error::domain("the pair must consist of distinct vertices"));
    }
    if !g.is_connected() {
        return Err(Error::domain("pair context needs a connected graph"));
    }
    let a = g.multiplicity(v, w);
    let minus = if a > 0 { g.delete_spindle((v, w))? } else { g.clone() };
    let bullet = g.identify_vertices(v, w)?;
    let j_minus = engine.j_or_zero(&minus);
    let j_bullet = engine.j_or_zero(&bullet);
    Ok(CutPairContext {
        base: g.clone(),
        pair: (v.min(w), v.max(w)),
        a,
        minus_split: even_odd_split(&j_minus),
        bullet_split: even_odd_split(&j_bullet),
        j_minus,
        j_bullet,
    })
}

impl CutPairContext {
    /// Test-oriented constructor from raw polynomials.
    pub fn from_polynomials(
        base: Multigraph,
        pair: (usize, usize),
        a: usize,
        j_minus: ExactPoly,
        j_bullet: ExactPoly,
    ) -> Self {
        CutPairContext {
            base,
            pair,
            a,
            minus_split: even_odd_split(&j_minus),
            bullet_split: even_odd_split(&j_bullet),
            j_minus,
            j_bullet,
        }
    }

    /// The square whose interpolatory property defines a compatible pair:
    /// summed splits on the left column, the deletion split on the right.
    ///
    /// ```text
    /// J0m + J0b  -->  x * J1m
    ///     ^                ^
    /// J1m + J1b  -->  J0m
    /// ```
    pub fn amicable_square(&self) -> PolyCube {
        let (j0m, j1m) = (&self.minus_split.even, &self.minus_split.odd);
        let (j0b, j1b) = (&self.bullet_split.even, &self.bullet_split.odd);
        PolyCube::new(
            2,
            vec![
                j1m.shift_up(1), // index 00: top-right
                j0m + j0b,       // index 01: top-left
                j0m.clone(),     // index 10: bottom-right
                j1m + j1b,       // index 11: bottom-left
            ],
        )
        .expect("four entries")
    }

    /// The two equivalent squares of the stronger pairwise condition.
    pub fn very_amicable_squares(&self) -> (PolyCube, PolyCube) {
        let (j0m, j1m) = (&self.minus_split.even, &self.minus_split.odd);
        let (j0b, j1b) = (&self.bullet_split.even, &self.bullet_split.odd);
        let first = PolyCube::new(
            2,
            vec![
                j1m.shift_up(1), // top-right: x * J1m
                j0b.clone(),     // top-left: J0b
                j0m.clone(),     // bottom-right: J0m
                j1b.clone(),     // bottom-left: J1b
            ],
        )
        .expect("four entries");
        let second = PolyCube::new(
            2,
            vec![
                j1b.shift_up(1), // top-right: x * J1b
                j0m.clone(),     // top-left: J0m
                j0b.clone(),     // bottom-right: J0b
                j1m.clone(),     // bottom-left: J1m
            ],
        )
        .expect("four entries");
        (first, second)
    }

    fn exact_bullet_pair(&self) -> PolyCube {
        PolyCube::interlacing_pair(self.bullet_split.odd.clone(), self.bullet_split.even.clone())
    }
}

/// Tests the compatibility square of the pair. When the deletion
/// J-polynomial vanishes the condition collapses to an exactly decidable
/// interlacing of the identification split; otherwise the square is sampled.
pub fn is_amicable(ctx: &CutPairContext, samples: usize, seed: u64) -> CubeVerdict {
    if ctx.j_minus.is_zero() {
        return cube_falsify(&ctx.exact_bullet_pair(), 0, seed);
    }
    cube_falsify(&ctx.amicable_square(), samples, seed)
}

/// Tests the stronger two-square condition; both displayed squares are
/// checked and a falsification of either falsifies the pair.
pub fn is_very_amicable(ctx: &CutPairContext, samples: usize, seed: u64) -> CubeVerdict {
    if ctx.j_minus.is_zero() {
        return cube_falsify(&ctx.exact_bullet_pair(), 0, seed);
    }
    let (first, second) = ctx.very_amicable_squares();
    let v1 = cube_falsify(&first, samples, seed);
    if v1.falsified() {
        return v1;
    }
    let v2 = cube_falsify(&second, samples, seed.wrapping_add(1));
    CubeVerdict {
        status: v2.status,
        samples_used: v1.samples_used + v2.samples_used,
        exact: false,
        witness: v2.witness,
    }
}

/// One falsified pair found by a scan.
#[derive(Clone, Debug)]
pub struct ScanHit {
    pub graph: Multigraph,
    pub pair: (usize, usize),
    pub verdict: CubeVerdict,
}

/// Aggregate result of a pair-compatibility campaign.
#[derive(Debug, Default)]
pub struct ScanReport {
    pub graphs: usize,
    pub pairs: usize,
    pub exact_decisions: usize,
    pub sampled_decisions: usize,
    pub falsified: Vec<ScanHit>,
    /// Pairs that passed the square check but failed the exact interlacing
    /// or disc-stability consequence; must stay empty.
    pub consequence_failures: Vec<(Multigraph, (usize, usize), String)>,
}

impl ScanReport {
    pub fn clean(&self) -> bool {
        self.falsified.is_empty() && self.consequence_failures.is_empty()
    }
}

fn mix(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ b.rotate_left(32);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z ^ (z >> 31)
}

/// Runs the pair check over every vertex pair of every supplied connected
/// graph. On every non-falsified pair the exact consequences are verified:
/// the whole graph's odd J-part interlaces its even part, and its
/// H-polynomial is certified disc-stable.
pub fn conjecture_scan<I>(graphs: I, samples: usize, seed: u64, check_consequences: bool) -> ScanReport
where
    I: IntoIterator<Item = Multigraph>,
{
    let mut engine = RelEngine::new();
    let mut report = ScanReport::default();
    for (gi, g) in graphs.into_iter().enumerate() {
        if !g.is_connected() || g.vertex_count() < 2 {
            continue;
        }
        report.graphs += 1;
        let n = g.vertex_count();
        let whole_split = even_odd_split(&engine.j_or_zero(&g));
        let mut consequence_checked = false;
        for v in 0..n {
            for w in (v + 1)..n {
                report.pairs += 1;
                let ctx = cut_pair_context(&mut engine, &g, v, w).expect("connected, distinct");
                let pair_seed = mix(seed, gi as u64, (v * n + w) as u64);
                let verdict = is_amicable(&ctx, samples, pair_seed);
                if verdict.exact {
                    report.exact_decisions += 1;
                } else {
                    report.sampled_decisions += 1;
                }
                if verdict.falsified() {
                    report.falsified.push(ScanHit {
                        graph: g.clone(),
                        pair: (v, w),
                        verdict,
                    });
                } else if check_consequences && !consequence_checked {
                    // one passing pair implies the whole-graph conclusions
                    consequence_checked = true;
                    if !interlaces(&whole_split.odd, &whole_split.even) {
                        report.consequence_failures.push((
                            g.clone(),
                            (v, w),
                            "odd J-part does not interlace even J-part".into(),
                        ));
                    }
                    let h = engine.h(&g).expect("connected");
                    let d = g.cycle_rank().expect("connected");
                    match schur_quasi_stable(&h, d) {
                        Ok(v) if v.is_quasi_stable() => {}
                        Ok(_) => report.consequence_failures.push((
                            g.clone(),
                            (v, w),
                            "H-polynomial is not disc-stable".into(),
                        )),
                        Err(e) => report.consequence_failures.push((
                            g.clone(),
                            (v, w),
                            format!("stability check errored: {e}"),
                        )),
                    }
                }
            }
        }
    }
    report
        .falsified
        .sort_by(|a, b| (format!("{}", a.graph), a.pair).cmp(&(format!("{}", b.graph), b.pair)));
    report
}
