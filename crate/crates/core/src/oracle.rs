//! Exhaustive ground truth for single-vertex folds.
//!
//! A vertex fold is modelled one-dimensionally: walking around the vertex,
//! each sector is laid down along the folded direction line and each crease
//! reverses the walking direction. A folded state is a stacking order of
//! the sectors; it is accepted when
//!
//! * (a) at every crease the two sectors are stacked as its label demands,
//! * (b) two creases folded to the same direction on the same side never
//!   interleave their sector pairs (taco-taco),
//! * (c) no sector whose open interval contains a crease's direction sits
//!   between that crease's two sectors (taco-tortilla).
//!
//! An assignment is valid when some stacking is accepted. Everything here is
//! computed independently of the counting recursion in [`crate::vertex`].

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::angle::{Angle, AngleSequence};
use crate::assignment::{MvAssignment, MvLabel};
use crate::error::{Error, Result};

/// Default largest number of sectors searched exhaustively.
pub const DEFAULT_MAX_SECTORS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_sectors: usize,
    /// Skip assignments with M − V ≠ ±2 without searching stackings.
    pub maekawa_prefilter: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_sectors: DEFAULT_MAX_SECTORS,
            maekawa_prefilter: true,
        }
    }
}

/// A fold of the two sectors `below_side` and `after` meeting at a crease.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreaseSlot {
    /// Folded direction of the crease.
    pub direction: BigRational,
    /// Sector preceding the crease in walking order.
    pub before: usize,
    /// Sector following the crease.
    pub after: usize,
}

/// Folded geometry of a closed vertex fold or an open chain of sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerModel {
    closed: bool,
    /// +1 face-up, −1 face-down; sector 0 is face-up.
    orientations: Vec<i8>,
    /// Position where each sector starts when walked in order; a closed
    /// model ends back at 0.
    directions: Vec<BigRational>,
    intervals: Vec<(BigRational, BigRational)>,
    creases: Vec<CreaseSlot>,
}

impl LayerModel {
    fn walk(
        lengths: &[BigRational],
    ) -> (Vec<BigRational>, Vec<i8>, Vec<(BigRational, BigRational)>) {
        let mut positions = Vec::with_capacity(lengths.len() + 1);
        positions.push(BigRational::zero());
        for (j, len) in lengths.iter().enumerate() {
            let last = positions[j].clone();
            positions.push(if j % 2 == 0 { last + len } else { last - len });
        }
        let orientations = (0..lengths.len())
            .map(|j| if j % 2 == 0 { 1 } else { -1 })
            .collect();
        let intervals = (0..lengths.len())
            .map(|j| {
                let (a, b) = (&positions[j], &positions[j + 1]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect();
        (positions, orientations, intervals)
    }

    /// An open chain of sectors with free ends; creases sit between
    /// consecutive sectors only.
    pub fn open_chain(lengths: &[BigRational]) -> Self {
        let (positions, orientations, intervals) = Self::walk(lengths);
        let creases = (1..lengths.len())
            .map(|j| CreaseSlot {
                direction: positions[j].clone(),
                before: j - 1,
                after: j,
            })
            .collect();
        let mut directions = positions;
        directions.pop();
        LayerModel {
            closed: false,
            orientations,
            directions,
            intervals,
            creases,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn sectors(&self) -> usize {
        self.orientations.len()
    }

    pub fn orientations(&self) -> &[i8] {
        &self.orientations
    }

    /// Folded direction of crease `j` (the start of sector `j`).
    pub fn directions(&self) -> &[BigRational] {
        &self.directions
    }

    pub fn intervals(&self) -> &[(BigRational, BigRational)] {
        &self.intervals
    }

    pub fn creases(&self) -> &[CreaseSlot] {
        &self.creases
    }

    /// +1 if the sectors at crease `c` extend to larger positions, −1 otherwise.
    fn crease_side(&self, c: &CreaseSlot) -> i8 {
        let (lo, _) = &self.intervals[c.after];
        if lo == &c.direction {
            1
        } else {
            -1
        }
    }

    fn constraints(&self, mv: &MvAssignment) -> Constraints {
        let mut above = Vec::new();
        for (c, slot) in self.creases.iter().enumerate() {
            let face_up = self.orientations[slot.before] == 1;
            let after_on_top = match mv.get(c) {
                MvLabel::Valley => face_up,
                MvLabel::Mountain => !face_up,
            };
            if after_on_top {
                above.push((slot.after, slot.before));
            } else {
                above.push((slot.before, slot.after));
            }
        }

        let mut tacos = Vec::new();
        for (i, c1) in self.creases.iter().enumerate() {
            for c2 in &self.creases[i + 1..] {
                if c1.direction == c2.direction && self.crease_side(c1) == self.crease_side(c2) {
                    tacos.push([c1.before, c1.after, c2.before, c2.after]);
                }
            }
        }

        let mut tortillas = Vec::new();
        for slot in &self.creases {
            for (k, (lo, hi)) in self.intervals.iter().enumerate() {
                if k != slot.before
                    && k != slot.after
                    && lo < &slot.direction
                    && &slot.direction < hi
                {
                    tortillas.push([k, slot.before, slot.after]);
                }
            }
        }
        Constraints {
            above,
            tacos,
            tortillas,
        }
    }
}

struct Constraints {
    /// `(upper, lower)` pairs.
    above: Vec<(usize, usize)>,
    tacos: Vec<[usize; 4]>,
    /// `[sector, before, after]`: the sector may not lie between the other two.
    tortillas: Vec<[usize; 3]>,
}

impl Constraints {
    fn satisfied(&self, height: &[usize]) -> bool {
        self.above.iter().all(|&(u, l)| height[u] > height[l])
            && self.tacos.iter().all(|t| !interleaved(height, t))
            && self.tortillas.iter().all(|t| !between(height, t))
    }

    /// Checks every constraint whose sectors are all placed once `placed`
    /// (the latest sector) went on top of the partial stack.
    fn partial_ok(&self, height: &[Option<usize>], placed: usize) -> bool {
        let h = |s: usize| height[s];
        for &(u, l) in &self.above {
            if u == placed || l == placed {
                if let (Some(hu), Some(hl)) = (h(u), h(l)) {
                    if hu < hl {
                        return false;
                    }
                }
            }
        }
        for t in &self.tacos {
            if t.contains(&placed) && t.iter().all(|&s| h(s).is_some()) {
                let hs: Vec<usize> = t.iter().map(|&s| h(s).unwrap()).collect();
                if interleaved(&hs, &[0, 1, 2, 3]) {
                    return false;
                }
            }
        }
        for t in &self.tortillas {
            if t.contains(&placed) && t.iter().all(|&s| h(s).is_some()) {
                let hs: Vec<usize> = t.iter().map(|&s| h(s).unwrap()).collect();
                if between(&hs, &[0, 1, 2]) {
                    return false;
                }
            }
        }
        true
    }
}

fn interleaved(height: &[usize], t: &[usize; 4]) -> bool {
    let (a1, a2) = minmax(height[t[0]], height[t[1]]);
    let (b1, b2) = minmax(height[t[2]], height[t[3]]);
    (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)
}

fn between(height: &[usize], t: &[usize; 3]) -> bool {
    let (lo, hi) = minmax(height[t[1]], height[t[2]]);
    lo < height[t[0]] && height[t[0]] < hi
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Folded directions and sector intervals of a closed vertex fold. Fails
/// unless walking around the vertex returns to the starting direction.
pub fn fold_directions(v: &AngleSequence) -> Result<LayerModel> {
    let lengths: Vec<BigRational> = v.angles().iter().map(|a| a.degrees().clone()).collect();
    let (positions, orientations, intervals) = LayerModel::walk(&lengths);
    let end = positions.last().cloned().unwrap_or_default();
    if !end.is_zero() || !lengths.len().is_multiple_of(2) {
        return Err(Error::Closure(end.to_string()));
    }
    let n = lengths.len();
    let creases = (0..n)
        .map(|j| CreaseSlot {
            direction: positions[j].clone(),
            before: (j + n - 1) % n,
            after: j,
        })
        .collect();
    let mut directions = positions;
    directions.pop();
    Ok(LayerModel {
        closed: true,
        orientations,
        directions,
        intervals,
        creases,
    })
}

/// Whether `stacking` (sector indices from bottom to top) is a consistent
/// folded state of `model` under `mv`.
pub fn stacking_valid(model: &LayerModel, mv: &MvAssignment, stacking: &[usize]) -> bool {
    let n = model.sectors();
    if mv.len() != model.creases.len() || stacking.len() != n {
        return false;
    }
    let mut height = vec![usize::MAX; n];
    for (pos, &s) in stacking.iter().enumerate() {
        if s >= n || height[s] != usize::MAX {
            return false;
        }
        height[s] = pos;
    }
    model.constraints(mv).satisfied(&height)
}

/// Searches for an accepted stacking, returning it bottom to top.
pub fn find_stacking(model: &LayerModel, mv: &MvAssignment) -> Option<Vec<usize>> {
    if mv.len() != model.creases.len() {
        return None;
    }
    let constraints = model.constraints(mv);
    let n = model.sectors();
    let mut height = vec![None; n];
    let mut stack = Vec::with_capacity(n);
    if extend(&constraints, &mut height, &mut stack, n) {
        Some(stack)
    } else {
        None
    }
}

fn extend(c: &Constraints, height: &mut [Option<usize>], stack: &mut Vec<usize>, n: usize) -> bool {
    if stack.len() == n {
        return true;
    }
    for s in 0..n {
        if height[s].is_some() {
            continue;
        }
        height[s] = Some(stack.len());
        stack.push(s);
        if c.partial_ok(height, s) && extend(c, height, stack, n) {
            return true;
        }
        stack.pop();
        height[s] = None;
    }
    false
}

fn check_capacity(v: &AngleSequence, config: &OracleConfig) -> Result<()> {
    if v.len() > config.max_sectors {
        return Err(Error::Capacity {
            sectors: v.len(),
            limit: config.max_sectors,
        });
    }
    Ok(())
}

/// Definitional validity of `mv`: some stacking folds the vertex flat.
pub fn oracle_is_valid(v: &AngleSequence, mv: &MvAssignment) -> Result<bool> {
    oracle_is_valid_with(v, mv, &OracleConfig::default())
}

pub fn oracle_is_valid_with(
    v: &AngleSequence,
    mv: &MvAssignment,
    config: &OracleConfig,
) -> Result<bool> {
    check_capacity(v, config)?;
    mv.ensure_len(v.len())?;
    match fold_directions(v) {
        Ok(model) => Ok(find_stacking(&model, mv).is_some()),
        Err(_) => Ok(false),
    }
}

/// Number of valid assignments, by exhaustive search.
pub fn oracle_count(v: &AngleSequence) -> Result<BigUint> {
    oracle_count_with(v, &OracleConfig::default())
}

pub fn oracle_count_with(v: &AngleSequence, config: &OracleConfig) -> Result<BigUint> {
    check_capacity(v, config)?;
    let total = 1u64 << v.len();
    // Disjoint mask ranges searched in parallel, merged by summation.
    let chunk = (total / 16).max(1);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(chunk as usize)
        .map(|lo| (lo, (lo + chunk).min(total)))
        .collect();
    let counts = ranges
        .into_par_iter()
        .map(|(lo, hi)| oracle_count_range(v, lo..hi, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(counts.into_iter().sum())
}

/// Counts valid assignments among the masks in `masks` (bit `j` set means
/// crease `j` is a mountain). Results over disjoint ranges add up.
pub fn oracle_count_range(
    v: &AngleSequence,
    masks: std::ops::Range<u64>,
    config: &OracleConfig,
) -> Result<BigUint> {
    check_capacity(v, config)?;
    let Ok(model) = fold_directions(v) else {
        return Ok(BigUint::zero());
    };
    let mut count = 0u64;
    for mask in masks {
        let mv = MvAssignment::from_mask(mask, v.len());
        if config.maekawa_prefilter && mv.tally().abs() != 2 {
            continue;
        }
        if find_stacking(&model, &mv).is_some() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// All valid assignments in mask order.
pub fn oracle_valid_assignments(v: &AngleSequence) -> Result<Vec<MvAssignment>> {
    let config = OracleConfig::default();
    check_capacity(v, &config)?;
    let Ok(model) = fold_directions(v) else {
        return Ok(Vec::new());
    };
    Ok((0..1u64 << v.len())
        .into_par_iter()
        .map(|mask| MvAssignment::from_mask(mask, v.len()))
        .filter(|mv| mv.tally().abs() == 2 && find_stacking(&model, mv).is_some())
        .collect())
}

/// Validity of labels on the `len + 1` creases bounding `len` consecutive
/// equal sectors of size `angle`, folding only those creases. The chain is
/// closed off by two end flaps long enough to cover every folded layer.
pub fn oracle_run_is_valid(angle: &Angle, len: usize, labels: &[MvLabel]) -> Result<bool> {
    if labels.len() != len + 1 {
        return Err(Error::LengthMismatch {
            expected: len + 1,
            found: labels.len(),
        });
    }
    let a = angle.degrees();
    let flap = a * BigRational::from_integer((len as i64 + 1).into());
    let mut lengths = vec![flap.clone()];
    lengths.extend(std::iter::repeat_n(a.clone(), len));
    lengths.push(flap);
    debug_assert!(lengths.iter().all(|l| l.is_positive()));
    let model = LayerModel::open_chain(&lengths);
    Ok(find_stacking(&model, &MvAssignment::new(labels.to_vec())).is_some())
}
