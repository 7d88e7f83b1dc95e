//! Interpolatory hypercubes of polynomials: a `2^k`-indexed family together
//! with the interpolation and flip operators, closure constructions
//! (products, face-sharing sums, extension, contraction), and a seeded
//! falsifier for the defining condition.
//!
//! Index convention: entry indices are `k`-bit words whose leftmost bit is
//! axis 1. Along each axis the 1-side is the interpolation "upper" face, and
//! a 1-cube `(P_0, P_1)` is interpolatory when both entries are standard
//! with only nonpositive zeros and `P_1` interlaces (or alternates left of)
//! `P_0`. Verdicts are exact for dimensions 0 and 1; in higher dimension a
//! falsification is a proof while "not falsified" is seeded sampling
//! evidence, with corner weights always included.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{eo_binomial, ExactPoly, Rat};
use crate::realroot::{interlaces, is_standard, only_nonpositive_zeros};

/// A map from `k`-bit indices to polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCube {
    dim: usize,
    entries: Vec<ExactPoly>,
}

impl PolyCube {
    /// Builds a cube from `2^dim` entries in ascending index order
    /// (index bits read left-to-right as axes 1..=dim).
    pub fn new(dim: usize, entries: Vec<ExactPoly>) -> Result<Self> {
        if dim > 16 {
            return Err(Error::refusal(format!("cube dimension {dim} too large")));
        }
        if entries.len() != 1 << dim {
            return Err(Error::domain(format!(
                "a {dim}-cube needs {} entries, got {}",
                1usize << dim,
                entries.len()
            )));
        }
        Ok(PolyCube { dim, entries })
    }

    /// A 0-cube holding one polynomial.
    pub fn single(p: ExactPoly) -> Self {
        PolyCube {
            dim: 0,
            entries: vec![p],
        }
    }

    /// The 1-cube asserting `small` precedes `large` (small at index 1).
    pub fn interlacing_pair(small: ExactPoly, large: ExactPoly) -> Self {
        PolyCube {
            dim: 1,
            entries: vec![large, small],
        }
    }

    /// Builds a cube from bitstring-keyed entries, e.g. `{"01": ..., ...}`.
    pub fn from_entries(dim: usize, map: &BTreeMap<String, ExactPoly>) -> Result<Self> {
        let size = 1usize << dim;
        if map.len() != size {
            return Err(Error::domain(format!(
                "a {dim}-cube needs {size} entries, got {}",
                map.len()
            )));
        }
        let mut entries = vec![ExactPoly::zero(); size];
        for (key, poly) in map {
            if key.len() != dim || !key.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::domain(format!(
                    "index {key:?} is not a {dim}-bit string"
                )));
            }
            let idx = if dim == 0 {
                0
            } else {
                usize::from_str_radix(key, 2).unwrap()
            };
            entries[idx] = poly.clone();
        }
        Ok(PolyCube { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[ExactPoly] {
        &self.entries
    }

    pub fn entry(&self, idx: usize) -> &ExactPoly {
        &self.entries[idx]
    }

    /// Bitstring key of an entry index.
    pub fn index_key(&self, idx: usize) -> String {
        (0..self.dim)
            .map(|axis| {
                if idx >> (self.dim - 1 - axis) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    fn axis_mask(&self, axis: usize) -> usize {
        1 << (self.dim - axis)
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis == 0 || axis > self.dim {
            return Err(Error::domain(format!(
                "axis {axis} out of range for a {}-cube",
                self.dim
            )));
        }
        Ok(())
    }

    /// Interpolation along one axis: the entry over reduced index `b` is
    /// `lambda * P(axis=1, b) + rho * P(axis=0, b)`. Dimension drops by one.
    pub fn interpolate_axis(&self, axis: usize, lambda: &Rat, rho: &Rat) -> Result<PolyCube> {
        self.check_axis(axis)?;
        let mask = self.axis_mask(axis);
        let low = mask - 1;
        let mut entries = Vec::with_capacity(1 << (self.dim - 1));
        for beta in 0..1usize << (self.dim - 1) {
            let zero_idx = ((beta & !low) << 1) | (beta & low);
            let one_idx = zero_idx | mask;
            let val = &self.entries[one_idx].scale(lambda) + &self.entries[zero_idx].scale(rho);
            entries.push(val);
        }
        Ok(PolyCube {
            dim: self.dim - 1,
            entries,
        })
    }

    /// The face of the cube with the given axis pinned to `bit`.
    pub fn face(&self, axis: usize, bit: bool) -> Result<PolyCube> {
        let (l, r) = if bit {
            (Rat::one(), Rat::zero())
        } else {
            (Rat::zero(), Rat::one())
        };
        self.interpolate_axis(axis, &l, &r)
    }

    /// Flip over a set of axes: indices are toggled on every axis in the
    /// set, and each entry whose original bit was 0 on a flipped axis picks
    /// up a factor of `x`. The empty set is the identity.
    pub fn flip(&self, axes: &[usize]) -> Result<PolyCube> {
        let mut mask = 0usize;
        for &axis in axes {
            self.check_axis(axis)?;
            mask |= self.axis_mask(axis);
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for alpha in 0..self.entries.len() {
            let src = alpha ^ mask;
            let zeros_flipped = (mask & !alpha).count_ones() as usize;
            entries.push(self.entries[src].shift_up(zeros_flipped));
        }
        Ok(PolyCube {
            dim: self.dim,
            entries,
        })
    }

    /// Entrywise product over concatenated indices (this cube's axes first).
    pub fn product(&self, other: &PolyCube) -> PolyCube {
        let dim = self.dim + other.dim;
        let mut entries = Vec::with_capacity(1 << dim);
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        PolyCube { dim, entries }
    }

    /// Face-sharing sum: the two cubes must agree on one face of axis 1
    /// (the 1-face normally, the 0-face when `on_zero_face` is set), and
    /// that shared face must not vanish identically. Entries on the other
    /// face are added, the shared face is kept.
    pub fn sum(&self, other: &PolyCube, on_zero_face: bool) -> Result<PolyCube> {
        if self.dim != other.dim {
            return Err(Error::domain("summed cubes must have equal dimension"));
        }
        if self.dim == 0 {
            return Err(Error::domain("face-sharing sum needs dimension >= 1"));
        }
        let mask = self.axis_mask(1);
        let shared_bit = if on_zero_face { 0 } else { mask };
        let mut shared_nonzero = false;
        for alpha in 0..self.entries.len() {
            if alpha & mask == shared_bit {
                if self.entries[alpha] != other.entries[alpha] {
                    return Err(Error::domain(format!(
                        "cubes disagree on the shared face at index {}",
                        self.index_key(alpha)
                    )));
                }
                shared_nonzero |= !self.entries[alpha].is_zero();
            }
        }
        if !shared_nonzero {
            return Err(Error::domain("shared face is identically zero"));
        }
        let entries = (0..self.entries.len())
            .map(|alpha| {
                if alpha & mask == shared_bit {
                    self.entries[alpha].clone()
                } else {
                    &self.entries[alpha] + &other.entries[alpha]
                }
            })
            .collect();
        Ok(PolyCube {
            dim: self.dim,
            entries,
        })
    }

    /// Extension to dimension `k+1`: the new axis-1 upper face is the cube
    /// itself and the lower face is its axis-1 flip. In dimension 0 the flip
    /// over the empty axis set is the identity, so the result repeats the
    /// entry.
    pub fn extend(&self) -> PolyCube {
        let lower = if self.dim == 0 {
            self.clone()
        } else {
            self.flip(&[1]).expect("axis 1 exists")
        };
        let mut entries = Vec::with_capacity(2 * self.entries.len());
        entries.extend(lower.entries.iter().cloned());
        entries.extend(self.entries.iter().cloned());
        PolyCube {
            dim: self.dim + 1,
            entries,
        }
    }

    /// Contraction of axes `i < j` into one axis (landing at axis `i` ofptr
    /// the result): over each residual index, the new upper entry is
    /// `P(i=0,j=1) + P(i=1,j=0)` and the new lower entry is
    /// `P(i=0,j=0) + x * P(i=1,j=1)`. Requires that the diagonal pair and
    /// the antidiagonal pair are not both identically zero.
    pub fn contract(&self, i: usize, j: usize) -> Result<PolyCube> {
        if self.dim < 2 {
            return Err(Error::domain("contraction needs dimension >= 2"));
        }
        self.check_axis(i)?;
        self.check_axis(j)?;
        if i >= j {
            return Err(Error::domain("contraction axes must satisfy i < j"));
        }
        let mi = self.axis_mask(i);
        let mj = self.axis_mask(j);
        let rest: Vec<usize> = (0..self.entries.len())
            .filter(|a| a & mi == 0 && a & mj == 0)
            .collect();
        let diag_ok = rest
            .iter()
            .any(|&r| !self.entries[r].is_zero() || !self.entries[r | mi | mj].is_zero());
        if !diag_ok {
            return Err(Error::domain(
                "contraction hypothesis fails: the (0,0)/(1,1) faces are identically zero",
            ));
        }
        let anti_ok = rest
            .iter()
            .any(|&r| !self.entries[r | mj].is_zero() || !self.entries[r | mi].is_zero());
        if !anti_ok {
            return Err(Error::domain(
                "contraction hypothesis fails: the (0,1)/(1,0) faces are identically zero",
            ));
        }

        let dim = self.dim - 1;
        let mut entries = Vec::with_capacity(1 << dim);
        for gamma in 0..1usize << dim {
            // merged value sits at result axis i; remaining result axes map
            // to source axes keeping order, skipping j
            let merged = gamma >> (dim - i) & 1 == 1;
            let mut base = 0usize;
            let mut src_axis = 1;
            for res_axis in 1..=dim {
                if res_axis == i {
                    src_axis += 1; // axis i of the source is set below
                    continue;
                }
                if src_axis == j {
                    src_axis += 1;
                }
                if gamma >> (dim - res_axis) & 1 == 1 {
                    base |= self.axis_mask(src_axis);
                }
                src_axis += 1;
            }
            entries.push(if merged {
                &self.entries[base | mj] + &self.entries[base | mi]
            } else {
                &self.entries[base] + &self.entries[base | mi | mj].shift_up(1)
            });
        }
        Ok(PolyCube { dim, entries })
    }
}

/// Full interpolation down to a single polynomial, applying weight pair
/// `(lambdas[i], rhos[i])` to original axis `i+1`.
pub fn interpolate_full(cube: &PolyCube, lambdas: &[Rat], rhos: &[Rat]) -> Result<ExactPoly> {
    if lambdas.len() != cube.dim() || rhos.len() != cube.dim() {
        return Err(Error::domain("weight tuples must match the cube dimension"));
    }
    let mut current = cube.clone();
    for (l, r) in lambdas.iter().zip(rhos) {
        current = current.interpolate_axis(1, l, r)?;
    }
    Ok(current.entries[0].clone())
}

/// The two adjacent squares formed by the even/odd parts of binomial powers:
/// the left square relates products at exponents `a`, `b` to the parts at
/// `a+b`; the `right` flag selects the companion square one step further.
pub fn eo_cube(a: usize, b: usize, right: bool) -> PolyCube {
    let pa = eo_binomial(a);
    let pb = eo_binomial(b);
    let pab = eo_binomial(a + b);
    let x = ExactPoly::var();
    // entries indexed [00, 01, 10, 11] = [top-right, top-left, bottom-right,
    // bottom-left] with arrows running bottom -> top and left -> right
    let entries = if right {
        vec![
            &x * &(&pa.odd * &pb.even),
            pab.even,
            &pa.even * &pb.even,
            pab.odd,
        ]
    } else {
        vec![
            pab.even,
            &pa.even * &pb.odd,
            pab.odd,
            &pa.odd * &pb.odd,
        ]
    };
    PolyCube { dim: 2, entries }
}

/// Verdict status of a falsification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeStatus {
    Falsified,
    NotFalsified,
}

/// A reproducible counterexample to the interpolatory condition.
#[derive(Clone, Debug)]
pub struct CubeWitness {
    pub flip_axes: Vec<usize>,
    pub lambdas: Vec<Rat>,
    pub rhos: Vec<Rat>,
    pub polynomial: ExactPoly,
    pub reason: String,
}

/// Result of testing the interpolatory condition. `exact` marks verdicts
/// that are decided (dimension <= 1, or the structure admits an exact
/// reduction); otherwise `NotFalsified` is evidence from `samples_used`
/// weight tuples, corners included.
#[derive(Clone, Debug)]
pub struct CubeVerdict {
    pub status: CubeStatus,
    pub samples_used: usize,
    pub exact: bool,
    pub witness: Option<CubeWitness>,
}

impl CubeVerdict {
    pub fn falsified(&self) -> bool {
        self.status == CubeStatus::Falsified
    }

    pub fn exact_pass(status_ok: bool, witness: Option<CubeWitness>) -> Self {
        CubeVerdict {
            status: if status_ok {
                CubeStatus::NotFalsified
            } else {
                CubeStatus::Falsified
            },
            samples_used: 0,
            exact: true,
            witness,
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Positive rational weight tuples for one indexed sample; indexing (not a
/// shared stream) keeps the sequence deterministic under any schedule.
fn sample_tuple(seed: u64, subset: usize, index: usize, k: usize) -> (Vec<Rat>, Vec<Rat>) {
    let mixed = splitmix(seed ^ splitmix((subset as u64) << 32 ^ index as u64));
    let mut rng = ChaCha8Rng::seed_from_u64(mixed);
    let mut draw = |_: usize| -> Rat {
        let n = rng.gen_range(1..=1_000_000i64);
        let d = rng.gen_range(1..=1_000_000i64);
        crate::poly::ratio(n, d)
    };
    let lambdas = (0..k).map(&mut draw).collect();
    let rhos = (0..k).map(&mut draw).collect();
    (lambdas, rhos)
}

fn check_interpolant(p: &ExactPoly) -> Option<&'static str> {
    if !is_standard(p) {
        Some("interpolant is not standard")
    } else if !only_nonpositive_zeros(p) {
        Some("interpolant has a zero off the nonpositive real axis")
    } else {
        None
    }
}

/// Tests whether the cube satisfies the interpolatory condition.
///
/// Dimensions 0 and 1 are decided exactly (entry checks plus interlacing).
/// For dimension >= 2 every flip subset is combined with all 0/1 corner
/// weights and `samples` random positive tuples per subset; `Falsified`
/// carries a reproducible witness and is a proof, `NotFalsified` is
/// sampling evidence only.
pub fn cube_falsify(cube: &PolyCube, samples: usize, seed: u64) -> CubeVerdict {
    let k = cube.dim();
    if k == 0 {
        let p = &cube.entries[0];
        let reason = check_interpolant(p);
        return CubeVerdict::exact_pass(
            reason.is_none(),
            reason.map(|r| CubeWitness {
                flip_axes: vec![],
                lambdas: vec![],
                rhos: vec![],
                polynomial: p.clone(),
                reason: r.into(),
            }),
        );
    }
    if k == 1 {
        let lower = &cube.entries[0];
        let upper = &cube.entries[1];
        let witness = |poly: &ExactPoly, reason: String| CubeWitness {
            flip_axes: vec![],
            lambdas: vec![],
            rhos: vec![],
            polynomial: poly.clone(),
            reason,
        };
        for (p, name) in [(upper, "index-1 entry"), (lower, "index-0 entry")] {
            if !is_standard(p) {
                return CubeVerdict::exact_pass(
                    false,
                    Some(witness(p, format!("{name} is not standard"))),
                );
            }
            if !only_nonpositive_zeros(p) {
                return CubeVerdict::exact_pass(
                    false,
                    Some(witness(
                        p,
                        format!("{name} has a zero off the nonpositive real axis"),
                    )),
                );
            }
        }
        if !interlaces(upper, lower) {
            return CubeVerdict::exact_pass(
                false,
                Some(witness(
                    upper,
                    "index-1 entry does not precede index-0 entry".into(),
                )),
            );
        }
        return CubeVerdict::exact_pass(true, None);
    }

    let mut used = 0usize;
    for subset in 0..1usize << k {
        let flip_axes: Vec<usize> = (1..=k)
            .filter(|axis| subset >> (axis - 1) & 1 == 1)
            .collect();
        let flipped = cube.flip(&flip_axes).expect("axes in range");
        let run = |lambdas: Vec<Rat>, rhos: Vec<Rat>, used: &mut usize| -> Option<CubeVerdict> {
            *used += 1;
            let p = interpolate_full(&flipped, &lambdas, &rhos).expect("matched dimension");
            check_interpolant(&p).map(|reason| CubeVerdict {
                status: CubeStatus::Falsified,
                samples_used: *used,
                exact: false,
                witness: Some(CubeWitness {
                    flip_axes: flip_axes.clone(),
                    lambdas,
                    rhos,
                    polynomial: p,
                    reason: reason.into(),
                }),
            })
        };
        // corner weights: the condition extends to the closure of the
        // positive orthant, so 0/1 faces must pass too
        for lm in 0..1usize << k {
            for rm in 0..1usize << k {
                let lambdas: Vec<Rat> = (0..k)
                    .map(|i| if lm >> i & 1 == 1 { Rat::one() } else { Rat::zero() })
                    .collect();
                let rhos: Vec<Rat> = (0..k)
                    .map(|i| if rm >> i & 1 == 1 { Rat::one() } else { Rat::zero() })
                    .collect();
                if let Some(v) = run(lambdas, rhos, &mut used) {
                    return v;
                }
            }
        }
        for idx in 0..samples {
            let (lambdas, rhos) = sample_tuple(seed, subset, idx, k);
            if let Some(v) = run(lambdas, rhos, &mut used) {
                return v;
            }
        }
    }
    CubeVerdict {
        status: CubeStatus::NotFalsified,
        samples_used: used,
        exact: false,
        witness: None,
    }
}

/// Sampled test of the per-axis cube condition for squares: interpolating
/// the chosen axis of the square and of its flipped copy must yield exact
/// interpolatory 1-cubes for every sampled positive weight pair. Corner
/// pairs are included. Equivalent, axis by axis, to the square being
/// interpolatory.
pub fn square_axis_condition(cube: &PolyCube, axis: usize, samples: usize, seed: u64) -> Result<CubeVerdict> {
    if cube.dim() != 2 {
        return Err(Error::domain("axis condition check is implemented for squares"));
    }
    cube.check_axis(axis)?;
    let flipped = cube.flip(&[axis])?;
    let mut used = 0usize;
    let corner = [
        (Rat::one(), Rat::zero()),
        (Rat::zero(), Rat::one()),
        (Rat::one(), Rat::one()),
    ];
    let mut weights: Vec<(Rat, Rat)> = corner.to_vec();
    for idx in 0..samples {
        let (l, r) = sample_tuple(seed, axis, idx, 1);
        weights.push((l[0].clone(), r[0].clone()));
    }
    for (l, r) in weights {
        for (variant, c) in [(0usize, cube), (1, &flipped)] {
            used += 1;
            let line = c.interpolate_axis(axis, &l, &r)?;
            let verdict = cube_falsify(&line, 0, seed);
            if verdict.falsified() {
                let inner = verdict.witness.map(|w| w.reason).unwrap_or_default();
                return Ok(CubeVerdict {
                    status: CubeStatus::Falsified,
                    samples_used: used,
                    exact: false,
                    witness: Some(CubeWitness {
                        flip_axes: if variant == 1 { vec![axis] } else { vec![] },
                        lambdas: vec![l.clone()],
                        rhos: vec![r.clone()],
                        polynomial: line.entries[0].clone(),
                        reason: format!("axis-{axis} interpolant fails: {inner}"),
                    }),
                });
            }
        }
    }
    Ok(CubeVerdict {
        status: CubeStatus::NotFalsified,
        samples_used: used,
        exact: false,
        witness: None,
    })
}
