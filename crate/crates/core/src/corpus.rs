//! Seeded generators of Kawasaki-valid vertex folds for cross-checking the
//! counting recursion against the oracle.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::{Angle, AngleSequence};
use crate::assignment::{MvAssignment, MvLabel};
use crate::crease_pattern::{normalize_pattern, CreasePattern, Point};

/// Random exact sequence of the given even degree satisfying Kawasaki's
/// condition. Angles are drawn from a small palette so equal-angle runs are
/// common; about half the results are rescaled onto flat paper, the rest
/// stay cones.
pub fn random_flat_foldable<R: Rng>(rng: &mut R, degree: usize) -> AngleSequence {
    assert!(
        degree >= 2 && degree.is_multiple_of(2),
        "degree must be even and positive"
    );
    let denom: i64 = *[1, 1, 2, 3, 7].choose(rng).unwrap();
    let palette: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=12)).collect();
    let mut angles: Vec<BigRational> = (0..degree)
        .map(|_| {
            let numer = if rng.gen_bool(0.85) {
                *palette.choose(rng).unwrap() * 10
            } else {
                rng.gen_range(1..=120)
            };
            BigRational::new(numer.into(), denom.into())
        })
        .collect();

    // Repair: pad an angle on the deficient side of the alternating sum.
    let defect = angles
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (i, a)| {
            if i % 2 == 0 {
                acc + a
            } else {
                acc - a
            }
        });
    if !defect.is_zero() {
        let parity = if defect.is_positive() { 1 } else { 0 };
        let slot = 2 * rng.gen_range(0..degree / 2) + parity;
        angles[slot] += defect.abs();
    }

    if rng.gen_bool(0.5) {
        let total: BigRational = angles.iter().fold(BigRational::zero(), |acc, a| acc + a);
        let scale = BigRational::from_integer(360.into()) / total;
        for a in &mut angles {
            *a *= &scale;
        }
    }
    AngleSequence::new(
        angles
            .into_iter()
            .map(|a| Angle::new(a).expect("positive"))
            .collect(),
    )
    .expect("nonempty")
}

/// `size` sequences cycling through the given degrees, reproducible from `seed`.
pub fn kawasaki_corpus(seed: u64, size: usize, degrees: &[usize]) -> Vec<AngleSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|i| random_flat_foldable(&mut rng, degrees[i % degrees.len()]))
        .collect()
}

/// Named sequences with known counts, including every worked example.
pub fn reference_vertices() -> Vec<(AngleSequence, u64)> {
    let table: [(&[i64], u64); 6] = [
        (&[90, 90, 90, 90], 8),
        (&[20, 10, 40, 50, 60, 60, 60, 60], 48),
        (&[100, 80, 80, 100], 6),
        (&[40, 60, 140, 120], 4),
        (&[140, 140], 2),
        (&[60, 60, 60, 60, 60, 60], 30),
    ];
    table
        .iter()
        .map(|(d, c)| (AngleSequence::from_degrees(d).expect("positive"), *c))
        .collect()
}

/// Random star on flat paper: `degree` creases from the origin to a
/// polygonal border, every sector under 180 degrees. With `kawasaki` the
/// alternate angles each sum to exactly 180; otherwise the angles are an
/// arbitrary partition of 360. Returns the intended exact angles and the
/// pattern, whose float-rounded crease ends approximate them.
pub fn random_star<R: Rng>(
    rng: &mut R,
    degree: usize,
    kawasaki: bool,
) -> (AngleSequence, CreasePattern) {
    assert!(degree >= 3);
    let partition = |rng: &mut R, parts: usize, total: i64| -> Vec<BigRational> {
        let weights: Vec<i64> = (0..parts).map(|_| rng.gen_range(1..=97)).collect();
        let sum: i64 = weights.iter().sum();
        weights
            .iter()
            .map(|&w| BigRational::new((w * total).into(), sum.into()))
            .collect()
    };
    let half = BigRational::from_integer(180.into());
    let angles = loop {
        let angles: Vec<BigRational> = if kawasaki && degree.is_multiple_of(2) {
            let odd = partition(rng, degree / 2, 180);
            let even = partition(rng, degree / 2, 180);
            odd.into_iter()
                .zip(even)
                .flat_map(|(a, b)| [a, b])
                .collect()
        } else {
            partition(rng, degree, 360)
        };
        if angles.iter().all(|a| a < &half) {
            break angles;
        }
    };

    let mut points = vec![Point::from_integers(0, 0)];
    let mut direction = 0.0f64;
    for a in &angles {
        let (s, c) = direction.to_radians().sin_cos();
        let to_rational = |x: f64| BigRational::from_float(x).expect("finite");
        points.push(Point::new(to_rational(10.0 * c), to_rational(10.0 * s)));
        direction += num_traits::ToPrimitive::to_f64(a).expect("finite");
    }
    let creases = (1..=degree).map(|i| (0, i)).collect();
    let pattern =
        CreasePattern::new(points, creases, (1..=degree).collect(), None).expect("star is planar");
    let seq = AngleSequence::new(
        angles
            .into_iter()
            .map(|a| Angle::new(a).expect("positive"))
            .collect(),
    )
    .expect("nonempty");
    (seq, pattern)
}

/// Integer segment test used while growing random patterns.
mod grid {
    pub type P = (i64, i64);

    fn orient(o: P, a: P, b: P) -> i64 {
        ((a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)).signum()
    }

    fn on_segment(a: P, b: P, p: P) -> bool {
        orient(a, b, p) == 0
            && a.0.min(b.0) <= p.0
            && p.0 <= a.0.max(b.0)
            && a.1.min(b.1) <= p.1
            && p.1 <= a.1.max(b.1)
    }

    /// The segments meet somewhere other than a single shared endpoint.
    pub fn conflict(a: P, b: P, c: P, d: P) -> bool {
        let shared = [a, b].iter().filter(|&&x| x == c || x == d).count();
        match shared {
            2 => true,
            1 => {
                let s = if a == c || a == d { a } else { b };
                let p = if s == a { b } else { a };
                let q = if s == c { d } else { c };
                on_segment(s, p, q) || on_segment(s, q, p)
            }
            _ => {
                let (o1, o2, o3, o4) = (
                    orient(a, b, c),
                    orient(a, b, d),
                    orient(c, d, a),
                    orient(c, d, b),
                );
                (o1 * o2 < 0 && o3 * o4 < 0)
                    || on_segment(a, b, c)
                    || on_segment(a, b, d)
                    || on_segment(c, d, a)
                    || on_segment(c, d, b)
            }
        }
    }

    pub fn passes_through(a: P, b: P, p: P) -> bool {
        p != a && p != b && on_segment(a, b, p)
    }
}

/// A random normalized crease pattern with between one and `max_interior`
/// interior vertices (split vertices included), all of even degree, with
/// a random assignment that gives every interior vertex M − V = ±2.
pub fn random_labelled_pattern<R: Rng>(rng: &mut R, max_interior: usize) -> CreasePattern {
    loop {
        if let Some(p) = try_labelled_pattern(rng, max_interior) {
            return p;
        }
    }
}

fn try_labelled_pattern<R: Rng>(rng: &mut R, max_interior: usize) -> Option<CreasePattern> {
    const W: i64 = 24;
    let mut border: Vec<grid::P> = vec![(0, 0), (W, 0), (W, W), (0, W)];
    for _ in 0..rng.gen_range(6..=12) {
        let t = rng.gen_range(1..W);
        let p = match rng.gen_range(0..4) {
            0 => (t, 0),
            1 => (W, t),
            2 => (t, W),
            _ => (0, t),
        };
        if !border.contains(&p) {
            border.push(p);
        }
    }
    // Counterclockwise along the perimeter.
    let perimeter = |p: &grid::P| match *p {
        (x, 0) if x < W => x,
        (W, y) if y < W => W + y,
        (x, W) if x > 0 => 3 * W - x,
        (0, y) => 4 * W - y,
        _ => unreachable!(),
    };
    border.sort_by_key(perimeter);

    let interior_count = rng.gen_range(1..=max_interior);
    let mut inner: Vec<grid::P> = Vec::new();
    while inner.len() < interior_count {
        let p = (rng.gen_range(2..W - 1), rng.gen_range(2..W - 1));
        if !inner.contains(&p) {
            inner.push(p);
        }
    }

    let points: Vec<grid::P> = border.iter().chain(&inner).copied().collect();
    let nb = border.len();
    let is_inner = |v: usize| v >= nb;
    let mut segments: Vec<(usize, usize)> = (0..nb).map(|i| (i, (i + 1) % nb)).collect();
    let boundary_edges = segments.len();

    let fits = |segments: &[(usize, usize)], a: usize, b: usize| {
        segments
            .iter()
            .all(|&(c, d)| !grid::conflict(points[a], points[b], points[c], points[d]))
            && (0..points.len()).all(|v| !grid::passes_through(points[a], points[b], points[v]))
    };

    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for a in nb..points.len() {
        for b in 0..a {
            candidates.push((b, a));
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let (a, b) = (rng.gen_range(0..nb), rng.gen_range(0..nb));
        if a != b {
            candidates.push((a, b));
        }
    }
    candidates.shuffle(rng);
    let degree = |segments: &[(usize, usize)], v: usize| {
        segments[boundary_edges..]
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    };
    for (a, b) in candidates {
        if (is_inner(a) && degree(&segments, a) >= 6) || (is_inner(b) && degree(&segments, b) >= 6)
        {
            continue;
        }
        if fits(&segments, a, b) {
            segments.push((a, b));
        }
    }

    // Parity repair: drop a boundary crease or add one until every interior
    // vertex has even degree of at least two.
    for _ in 0..4 * points.len() {
        let Some(v) = (nb..points.len()).find(|&v| {
            let d = degree(&segments, v);
            d % 2 == 1 || d == 0
        }) else {
            break;
        };
        let d = degree(&segments, v);
        let to_boundary = segments[boundary_edges..]
            .iter()
            .position(|&(a, b)| (a == v && !is_inner(b)) || (b == v && !is_inner(a)));
        if d % 2 == 1 && d > 1 {
            if let Some(i) = to_boundary {
                segments.remove(boundary_edges + i);
                continue;
            }
        }
        let mut targets: Vec<usize> = (0..nb).collect();
        targets.shuffle(rng);
        {
            let t = targets.into_iter().find(|&t| fits(&segments, v, t))?;
            segments.push((v, t));
        }
    }
    if (nb..points.len()).any(|v| {
        let d = degree(&segments, v);
        d % 2 == 1 || d == 0
    }) {
        return None;
    }

    let pts = points
        .iter()
        .map(|&(x, y)| Point::from_integers(x, y))
        .collect();
    let creases = segments[boundary_edges..].to_vec();
    let pattern = CreasePattern::new(pts, creases, (0..nb).collect(), None).ok()?;
    let pattern = normalize_pattern(&pattern);
    if pattern.interior_vertices().count() > max_interior {
        return None;
    }
    let assignment = random_local_maekawa(rng, &pattern)?;
    pattern.with_assignment(Some(assignment)).ok()
}

/// Random labels giving every interior vertex local M − V = ±2, by
/// randomized backtracking; `None` when no such labelling exists.
pub fn random_local_maekawa<R: Rng>(rng: &mut R, p: &CreasePattern) -> Option<MvAssignment> {
    let m = p.creases().len();
    let interior: Vec<usize> = p.interior_vertices().collect();
    let targets: Vec<Vec<usize>> = interior
        .iter()
        .map(|&v| {
            let d = p.degree(v);
            let mut t: Vec<usize> = [d + 2, d.wrapping_sub(2)]
                .into_iter()
                .filter(|x| x % 2 == 0 && *x / 2 <= d)
                .map(|x| x / 2)
                .collect();
            t.shuffle(rng);
            t
        })
        .collect();
    let slot: std::collections::HashMap<usize, usize> =
        interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let ends: Vec<Vec<usize>> = p
        .creases()
        .iter()
        .map(|&(a, b)| {
            [a, b]
                .into_iter()
                .filter_map(|v| slot.get(&v).copied())
                .collect()
        })
        .collect();
    let mut mountains = vec![0usize; interior.len()];
    let mut remaining: Vec<usize> = interior.iter().map(|&v| p.degree(v)).collect();
    let mut labels = vec![MvLabel::Valley; m];

    fn feasible(targets: &[usize], mountains: usize, remaining: usize) -> bool {
        targets
            .iter()
            .any(|&t| mountains <= t && t <= mountains + remaining)
    }

    #[allow(clippy::too_many_arguments)]
    fn go<R: Rng>(
        rng: &mut R,
        c: usize,
        ends: &[Vec<usize>],
        targets: &[Vec<usize>],
        mountains: &mut [usize],
        remaining: &mut [usize],
        labels: &mut [MvLabel],
    ) -> bool {
        if c == labels.len() {
            return true;
        }
        let mut order = [MvLabel::Mountain, MvLabel::Valley];
        order.shuffle(rng);
        for label in order {
            for &i in &ends[c] {
                remaining[i] -= 1;
                if label == MvLabel::Mountain {
                    mountains[i] += 1;
                }
            }
            let ok = ends[c]
                .iter()
                .all(|&i| feasible(&targets[i], mountains[i], remaining[i]));
            if ok {
                labels[c] = label;
                if go(rng, c + 1, ends, targets, mountains, remaining, labels) {
                    return true;
                }
            }
            for &i in &ends[c] {
                remaining[i] += 1;
                if label == MvLabel::Mountain {
                    mountains[i] -= 1;
                }
            }
        }
        false
    }

    if !(0..interior.len()).all(|i| feasible(&targets[i], 0, remaining[i])) {
        return None;
    }
    go(
        rng,
        0,
        &ends,
        &targets,
        &mut mountains,
        &mut remaining,
        &mut labels,
    )
    .then(|| MvAssignment::new(labels))
}

/// Three degree-4 vertices around a triangle. Every vertex satisfies
/// Kawasaki exactly (its crease directions are irrational, so only the
/// reflection test can tell), yet at each vertex the triangle's corner is the
/// unique smallest sector, forcing its two triangle creases to opposite
/// labels: impossible around a 3-cycle. Creases 0, 1, 2 are the triangle.
pub fn non_sufficiency_witness() -> CreasePattern {
    let p = |x: i64, y: i64| Point::from_integers(x, y);
    let third = |n: i64| BigRational::new(n.into(), 3.into());
    let points = vec![
        p(0, 0),
        p(4, 0),
        p(2, 3),
        p(-10, -10),
        p(0, -10),
        p(4, -10),
        p(14, -10),
        Point::new(BigRational::from_integer(14.into()), third(20)),
        p(14, 11),
        p(14, 13),
        p(-10, 13),
        p(-10, 11),
        Point::new(BigRational::from_integer((-10).into()), third(20)),
    ];
    let creases = vec![
        (0, 1),
        (1, 2),
        (2, 0),
        (0, 12),
        (0, 4),
        (1, 5),
        (1, 7),
        (2, 8),
        (2, 11),
    ];
    CreasePattern::new(points, creases, (3..13).collect(), None).expect("witness is planar")
}
