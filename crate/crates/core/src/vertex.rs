//! Single-vertex flat-foldability: Kawasaki and Maekawa conditions,
//! equal-angle run conditions, crimp-based assignment validity and the
//! recursive count of valid mountain-valley assignments.
//!
//! Sector `i` lies between crease `i` and crease `i + 1` (cyclically), so a
//! run of equal sectors `i..=i+k` is bounded by creases `i..=i+k+1`.

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::angle::{Angle, AngleSequence};
use crate::assignment::MvAssignment;
use crate::error::{Error, Result};

/// A maximal run of equal sectors whose two cyclic neighbours are strictly
/// larger. `len` is the number of equal sectors, i.e. `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunCondition {
    pub start: usize,
    pub len: usize,
}

impl RunCondition {
    pub fn new(start: usize, len: usize) -> Self {
        assert!(len >= 1, "a run covers at least one sector");
        RunCondition { start, len }
    }

    /// Number of sectors in the run minus one.
    pub fn k(&self) -> usize {
        self.len - 1
    }

    /// Indices of the `k + 2` creases bounding the run, in order.
    pub fn creases(&self, degree: usize) -> Vec<usize> {
        (0..=self.len).map(|j| (self.start + j) % degree).collect()
    }

    /// Admissible values of M − V over the run's creases.
    pub fn required_tally(&self) -> &'static [i64] {
        if self.k().is_multiple_of(2) {
            &[0]
        } else {
            &[-1, 1]
        }
    }
}

/// α1 − α2 + α3 − ⋯ − α2n.
pub fn alternating_sum(v: &AngleSequence) -> Result<BigRational> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddDegree(v.len()));
    }
    Ok(v.angles()
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, a)| {
            if i % 2 == 0 {
                acc + a.degrees()
            } else {
                acc - a.degrees()
            }
        }))
}

/// Kawasaki's condition. Holds for cones as well as flat paper; odd degree
/// is never flat-foldable.
pub fn kawasaki(v: &AngleSequence) -> bool {
    alternating_sum(v).map(|s| s.is_zero()).unwrap_or(false)
}

/// Maekawa's condition: M − V = ±2.
pub fn maekawa_check(mv: &MvAssignment) -> bool {
    mv.tally().abs() == 2
}

/// All maximal equal-angle runs with strictly larger neighbours on both
/// sides, ordered by start index. Runs may wrap past the last sector.
/// Empty exactly when every angle is equal.
pub fn find_runs(v: &AngleSequence) -> Vec<RunCondition> {
    let n = v.len();
    let a = v.angles();
    // A sector that starts a maximal run; none exists if all are equal.
    let Some(seam) = (0..n).find(|&i| a[i] != a[(i + n - 1) % n]) else {
        return Vec::new();
    };

    let mut runs = Vec::new();
    let mut offset = 0;
    while offset < n {
        let start = (seam + offset) % n;
        let mut len = 1;
        while len < n && a[(start + len) % n] == a[start] {
            len += 1;
        }
        let left = &a[(start + n - 1) % n];
        let right = &a[(start + len) % n];
        if left > &a[start] && right > &a[start] {
            runs.push(RunCondition::new(start, len));
        }
        offset += len;
    }
    runs.sort_by_key(|r| r.start);
    runs
}

fn check_run(v: &AngleSequence, run: &RunCondition) -> Result<()> {
    let n = v.len();
    let mismatch = || Error::RunMismatch {
        start: run.start,
        len: run.len,
    };
    if run.start >= n || run.len >= n {
        return Err(mismatch());
    }
    let first = &v.angles()[run.start];
    if (1..run.len).any(|j| &v.angles()[(run.start + j) % n] != first) {
        return Err(mismatch());
    }
    Ok(())
}

/// Whether the labels on the creases bounding `run` can be folded without
/// self-intersection when only those creases are considered: M − V over
/// them must be 0 for an odd number of equal sectors, ±1 for an even number.
pub fn run_validity(v: &AngleSequence, run: &RunCondition, mv: &MvAssignment) -> Result<bool> {
    check_run(v, run)?;
    mv.ensure_len(v.len())?;
    let tally: i64 = run.creases(v.len()).iter().map(|&c| mv.get(c).sign()).sum();
    Ok(run.required_tally().contains(&tally))
}

/// Decides whether `mv` is a valid assignment for the vertex by crimping
/// away locally minimal sectors bounded by opposite labels until a base
/// case is reached.
pub fn crimp_validity(v: &AngleSequence, mv: &MvAssignment) -> Result<bool> {
    if !v.is_exact() {
        return Err(Error::Inexact);
    }
    if !kawasaki(v) {
        return Err(Error::NotFlatFoldable(v.to_string()));
    }
    mv.ensure_len(v.len())?;

    let mut angles: Vec<BigRational> = v.angles().iter().map(|a| a.degrees().clone()).collect();
    let mut labels = mv.labels().to_vec();
    loop {
        let n = angles.len();
        if n == 2 {
            return Ok(angles[0] == angles[1] && labels[0] == labels[1]);
        }
        if angles.windows(2).all(|w| w[0] == w[1]) {
            let tally: i64 = labels.iter().map(|l| l.sign()).sum();
            return Ok(tally.abs() == 2);
        }
        let eligible = (0..n).find(|&i| {
            let prev = &angles[(i + n - 1) % n];
            let next = &angles[(i + 1) % n];
            prev >= &angles[i] && &angles[i] <= next && labels[i] != labels[(i + 1) % n]
        });
        let Some(i) = eligible else {
            return Ok(false);
        };

        // Sectors i-1, i, i+1 become one; creases i and i+1 disappear.
        let merged = &angles[(i + n - 1) % n] - &angles[i] + &angles[(i + 1) % n];
        let mut next_angles = Vec::with_capacity(n - 2);
        let mut next_labels = Vec::with_capacity(n - 2);
        next_angles.push(merged);
        next_labels.push(labels[(i + n - 1) % n]);
        for j in 2..n - 1 {
            next_angles.push(angles[(i + j) % n].clone());
            next_labels.push(labels[(i + j) % n]);
        }
        angles = next_angles;
        labels = next_labels;
    }
}

/// Lower and upper bounds `2^n` and `2·C(2n, n−1)` on the number of valid
/// assignments of a degree-2n flat vertex fold.
pub fn bounds(v: &AngleSequence) -> Result<(BigUint, BigUint)> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddDegree(v.len()));
    }
    let n = v.len() / 2;
    Ok((BigUint::from(2u32).pow(n as u32), all_equal_count(v.len())))
}

/// Number of valid assignments when all `degree` angles are equal.
fn all_equal_count(degree: usize) -> BigUint {
    let n = degree / 2;
    BigUint::from(2u32) * binomial(BigUint::from(degree), BigUint::from(n - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Start sector of the reduced run, in the sequence being reduced.
    pub start: usize,
    /// Number of equal sectors in the run (`k + 1`).
    pub run_length: usize,
    pub factor: BigUint,
    /// Sequence left after the reduction; it may be a cone.
    pub residual: AngleSequence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub count: BigUint,
    pub trace: Vec<ReductionStep>,
    /// Closed-form value of the all-equal sequence the recursion ends on.
    pub base: BigUint,
    pub bounds: (BigUint, BigUint),
}

/// Counts valid mountain-valley assignments of a flat vertex fold (on flat
/// paper or a cone) by repeatedly reducing a minimal equal-angle run.
///
/// Among candidate runs the one with the smallest angle is reduced first,
/// ties going to the smallest start index.
pub fn count_mv(v: &AngleSequence) -> Result<CountResult> {
    count_mv_by(v, |seq, runs| {
        let mut best = 0;
        for (idx, run) in runs.iter().enumerate().skip(1) {
            if seq.angles()[run.start] < seq.angles()[runs[best].start] {
                best = idx;
            }
        }
        best
    })
}

/// [`count_mv`] with a caller-chosen reduction order: `choose` receives the
/// current sequence and its candidate runs and returns the index of the run
/// to reduce. The count does not depend on the choice.
pub fn count_mv_by<F>(v: &AngleSequence, mut choose: F) -> Result<CountResult>
where
    F: FnMut(&AngleSequence, &[RunCondition]) -> usize,
{
    if !v.is_exact() {
        return Err(Error::Inexact);
    }
    if !kawasaki(v) {
        return Err(Error::NotFlatFoldable(v.to_string()));
    }
    let bounds = bounds(v)?;

    let mut current = v.clone();
    let mut trace = Vec::new();
    let mut product = BigUint::one();
    while !current.all_equal() {
        let runs = find_runs(&current);
        let pick = choose(&current, &runs);
        let run = runs.get(pick).cloned().ok_or(Error::RunMismatch {
            start: pick,
            len: 0,
        })?;
        let (factor, residual) = reduce_run(&current, &run);
        debug_assert!(kawasaki(&residual));
        product *= &factor;
        trace.push(ReductionStep {
            start: run.start,
            run_length: run.len,
            factor,
            residual: residual.clone(),
        });
        current = residual;
    }
    let base = all_equal_count(current.len());
    Ok(CountResult {
        count: product * &base,
        trace,
        base,
        bounds,
    })
}

/// Applies one reduction step to a run with strictly larger neighbours.
fn reduce_run(v: &AngleSequence, run: &RunCondition) -> (BigUint, AngleSequence) {
    let n = v.len();
    let k = run.k();
    // Rotate so the run occupies 0..=k; its left neighbour is then last.
    let r = v.rotated(run.start);
    let a = r.angles();
    let kb = BigUint::from(k + 2);
    if k.is_multiple_of(2) {
        let factor = binomial(kb, BigUint::from((k + 2) / 2));
        let merged = a[n - 1].degrees() - a[0].degrees() + a[k + 1].degrees();
        let mut residual = vec![Angle::new(merged).expect("left neighbour exceeds the run")];
        residual.extend(a[k + 2..n - 1].iter().cloned());
        (factor, AngleSequence::new(residual).expect("nonempty"))
    } else {
        let factor = binomial(kb, BigUint::from(k.div_ceil(2)));
        let residual = a[k + 1..].to_vec();
        (factor, AngleSequence::new(residual).expect("nonempty"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[i64]) -> AngleSequence {
        AngleSequence::from_degrees(d).unwrap()
    }

    fn mv(s: &str) -> MvAssignment {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alternating_sum(&seq(&[90, 90, 90, 90])).unwrap(), int(0));
        assert_eq!(
            alternating_sum(&seq(&[20, 10, 40, 50, 60, 60, 60, 60])).unwrap(),
            int(0)
        );
        assert_eq!(alternating_sum(&seq(&[100, 80, 90, 90])).unwrap(), int(20));
        assert_eq!(
            alternating_sum(&seq(&[90, 90, 180])),
            Err(Error::OddDegree(3))
        );
    }

    #[test]
    fn kawasaki_examples() {
        assert!(kawasaki(&seq(&[90, 90, 90, 90])));
        assert!(!kawasaki(&seq(&[100, 80, 90, 90])));
        assert!(kawasaki(&seq(&[140, 140])));
        assert!(!kawasaki(&seq(&[120, 120, 120])));
    }

    #[test]
    fn maekawa_examples() {
        assert!(maekawa_check(&mv("MMMV")));
        assert!(!maekawa_check(&mv("MMVV")));
        assert!(!maekawa_check(&mv("MMMMMV")));
        assert!(maekawa_check(&mv("VVVM")));
    }

    #[test]
    fn find_runs_examples() {
        assert_eq!(
            find_runs(&seq(&[20, 10, 40, 50, 60, 60, 60, 60])),
            vec![RunCondition::new(1, 1)]
        );
        assert!(find_runs(&seq(&[60, 60, 60, 60])).is_empty());
        assert_eq!(
            find_runs(&seq(&[100, 80, 80, 100])),
            vec![RunCondition::new(1, 2)]
        );
    }

    #[test]
    fn find_runs_wraps_the_seam() {
        let runs = find_runs(&seq(&[80, 100, 100, 80]));
        assert_eq!(runs, vec![RunCondition::new(3, 2)]);
        assert_eq!(runs[0].creases(4), vec![3, 0, 1]);
    }

    #[test]
    fn find_runs_skips_non_minimal_runs() {
        // 30,30 sits between 10 and 50: not a local minimum.
        let runs = find_runs(&seq(&[10, 30, 30, 50, 40, 60]));
        assert_eq!(runs, vec![RunCondition::new(0, 1), RunCondition::new(4, 1)]);
    }

    #[test]
    fn run_validity_examples() {
        let v = seq(&[40, 60, 140, 120]);
        let run = RunCondition::new(0, 1);
        assert!(run_validity(&v, &run, &mv("MVMM")).unwrap());
        assert!(!run_validity(&v, &run, &mv("MMMV")).unwrap());

        let w = seq(&[100, 80, 80, 100]);
        let run = RunCondition::new(1, 2);
        assert!(run_validity(&w, &run, &mv("VMVM")).unwrap());
        assert!(!run_validity(&w, &run, &mv("VMMM")).unwrap());
    }

    #[test]
    fn run_validity_rejects_inconsistent_run() {
        let v = seq(&[40, 60, 140, 120]);
        let err = run_validity(&v, &RunCondition::new(0, 2), &mv("MVMM")).unwrap_err();
        assert_eq!(err, Error::RunMismatch { start: 0, len: 2 });
        assert!(run_validity(&v, &RunCondition::new(7, 1), &mv("MVMM")).is_err());
    }

    #[test]
    fn crimp_validity_examples() {
        assert!(crimp_validity(&seq(&[90, 90, 90, 90]), &mv("MMMV")).unwrap());
        assert!(!crimp_validity(&seq(&[100, 80, 80, 100]), &mv("MMMM")).unwrap());
        assert!(crimp_validity(&seq(&[40, 60, 140, 120]), &mv("MVMM")).unwrap());
        assert!(!crimp_validity(&seq(&[40, 60, 140, 120]), &mv("MMMV")).unwrap());
        assert!(matches!(
            crimp_validity(&seq(&[100, 80, 90, 90]), &mv("MMMV")),
            Err(Error::NotFlatFoldable(_))
        ));
        assert!(matches!(
            crimp_validity(&seq(&[90, 90, 90, 90]), &mv("MMV")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn crimp_validity_two_sector_cone() {
        let v = seq(&[140, 140]);
        assert!(crimp_validity(&v, &mv("MM")).unwrap());
        assert!(crimp_validity(&v, &mv("VV")).unwrap());
        assert!(!crimp_validity(&v, &mv("MV")).unwrap());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(bounds(&seq(&[1; 8])).unwrap(), (big(16), big(112)));
        assert_eq!(bounds(&seq(&[1; 4])).unwrap(), (big(4), big(8)));
        assert_eq!(bounds(&seq(&[1; 2])).unwrap(), (big(2), big(2)));
        assert_eq!(bounds(&seq(&[1; 5])), Err(Error::OddDegree(5)));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_mv(&seq(&[90, 90, 90, 90])).unwrap().count, big(8));
        assert_eq!(count_mv(&seq(&[100, 80, 80, 100])).unwrap().count, big(6));
        assert_eq!(count_mv(&seq(&[40, 60, 140, 120])).unwrap().count, big(4));
        assert_eq!(count_mv(&seq(&[140, 140])).unwrap().count, big(2));
    }

    #[test]
    fn count_worked_example_trace() {
        let result = count_mv(&seq(&[20, 10, 40, 50, 60, 60, 60, 60])).unwrap();
        assert_eq!(result.count, big(48));
        let factors: Vec<_> = result.trace.iter().map(|s| s.factor.clone()).collect();
        assert_eq!(factors, vec![big(2), big(3)]);
        assert_eq!(result.base, big(8));
        assert_eq!(result.trace[0].residual, seq(&[50, 50, 60, 60, 60, 60]));
        assert_eq!(result.trace[1].residual, seq(&[60, 60, 60, 60]));
        assert_eq!((result.trace[0].start, result.trace[0].run_length), (1, 1));
        assert_eq!((result.trace[1].start, result.trace[1].run_length), (0, 2));
        assert_eq!(result.bounds, (big(16), big(112)));
    }

    #[test]
    fn count_product_matches_trace() {
        let result = count_mv(&seq(&[20, 10, 40, 50, 60, 60, 60, 60])).unwrap();
        let product = result
            .trace
            .iter()
            .fold(result.base.clone(), |acc, s| acc * &s.factor);
        assert_eq!(product, result.count);
    }

    #[test]
    fn count_errors() {
        assert!(matches!(
            count_mv(&seq(&[100, 80, 90, 90])),
            Err(Error::NotFlatFoldable(_))
        ));
        let approx = AngleSequence::approximate(seq(&[90, 90, 90, 90]).angles().to_vec()).unwrap();
        assert_eq!(count_mv(&approx), Err(Error::Inexact));
        assert_eq!(crimp_validity(&approx, &mv("MMMV")), Err(Error::Inexact));
    }

    #[test]
    fn count_large_degree_does_not_overflow() {
        let v = AngleSequence::from_degrees(&[3; 120]).unwrap();
        let result = count_mv(&v).unwrap();
        // 2·C(120, 59)
        let expected = BigUint::from(2u32) * binomial(BigUint::from(120u32), BigUint::from(59u32));
        assert_eq!(result.count, expected);
        assert!(result.count > BigUint::from(u64::MAX));
    }

    #[test]
    fn forced_alternative_order_gives_same_count() {
        // Two disjoint minimal runs: 10 at sector 1 and 30,30 at sectors 4-5.
        let v = seq(&[50, 10, 50, 70, 30, 30, 70, 90]);
        assert!(kawasaki(&v));
        assert_eq!(find_runs(&v).len(), 2);
        let first = count_mv_by(&v, |_, _| 0).unwrap();
        let last = count_mv_by(&v, |_, runs| runs.len() - 1).unwrap();
        assert_eq!(first.count, last.count);
        assert_ne!(first.trace[0].start, last.trace[0].start);
    }
}
