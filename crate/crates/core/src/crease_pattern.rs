//! Crease patterns as planar straight-line graphs with exact rational
//! coordinates.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::angle::{Angle, AngleSequence};
use crate::assignment::{MvAssignment, MvLabel};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point::new(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub position: Point,
    pub interior: bool,
    /// Degree-2 vertex inserted by [`normalize_pattern`] to split a crease
    /// running from boundary to boundary.
    pub split: bool,
}

/// A validated crease pattern: vertices, straight creases between them, the
/// paper's border as a cycle of vertices and optionally a mountain-valley
/// label per crease. Creases meet only at shared endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreasePattern {
    vertices: Vec<Vertex>,
    creases: Vec<(usize, usize)>,
    boundary: Vec<usize>,
    assignment: Option<MvAssignment>,
}

fn cross(o: &Point, a: &Point, b: &Point) -> BigRational {
    let (u, v) = (a.sub(o), b.sub(o));
    &u.x * &v.y - &u.y * &v.x
}

fn orient(o: &Point, a: &Point, b: &Point) -> Ordering {
    cross(o, a, b).cmp(&BigRational::zero())
}

/// `p` lies on the closed segment `a`-`b`, given that the three are collinear.
fn within_box(a: &Point, b: &Point, p: &Point) -> bool {
    let between = |lo: &BigRational, hi: &BigRational, x: &BigRational| {
        (lo <= x && x <= hi) || (hi <= x && x <= lo)
    };
    between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal && within_box(a, b, p)
}

/// Closed segments `a`-`b` and `c`-`d` share at least one point.
fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 != o2
        && o3 != o4
        && o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

impl CreasePattern {
    /// Validates and builds a pattern. Vertices listed in `boundary` are on
    /// the border; every other vertex must lie strictly inside it.
    pub fn new(
        points: Vec<Point>,
        creases: Vec<(usize, usize)>,
        boundary: Vec<usize>,
        assignment: Option<MvAssignment>,
    ) -> Result<Self> {
        let n = points.len();
        if boundary.len() < 3 {
            return Err(Error::Structural(
                "boundary needs at least three vertices".into(),
            ));
        }
        let mut on_boundary = vec![false; n];
        for &b in &boundary {
            if b >= n {
                return Err(Error::Structural(format!(
                    "boundary vertex {b} out of range"
                )));
            }
            if on_boundary[b] {
                return Err(Error::Structural(format!("boundary repeats vertex {b}")));
            }
            on_boundary[b] = true;
        }
        for (i, &(a, b)) in creases.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Structural(format!(
                    "crease {i} has an endpoint out of range"
                )));
            }
            if a == b {
                return Err(Error::Structural(format!("crease {i} is a self-loop")));
            }
            if creases[..i]
                .iter()
                .any(|&(c, d)| (c, d) == (a, b) || (c, d) == (b, a))
            {
                return Err(Error::Structural(format!(
                    "crease {i} duplicates an earlier crease"
                )));
            }
        }
        if let Some(mv) = &assignment {
            mv.ensure_len(creases.len())?;
        }
        for i in 0..n {
            if let Some(j) = (0..i).find(|&j| points[j] == points[i]) {
                return Err(Error::Structural(format!("vertices {j} and {i} coincide")));
            }
        }

        let vertices = points
            .into_iter()
            .zip(&on_boundary)
            .map(|(position, &b)| Vertex {
                position,
                interior: !b,
                split: false,
            })
            .collect();
        let pattern = CreasePattern {
            vertices,
            creases,
            boundary,
            assignment,
        };
        pattern.check_planar()?;
        Ok(pattern)
    }

    fn boundary_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.boundary.len();
        (0..m).map(move |i| (self.boundary[i], self.boundary[(i + 1) % m]))
    }

    fn check_planar(&self) -> Result<()> {
        let mut segments: Vec<(usize, usize, String)> = self
            .creases
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (a, b, format!("crease {i}")))
            .collect();
        segments.extend(
            self.boundary_edges()
                .map(|(a, b)| (a, b, format!("boundary edge {a}-{b}"))),
        );
        let pos = |v: usize| &self.vertices[v].position;

        if cross_sum(self.boundary.iter().map(|&b| pos(b))).is_zero() {
            return Err(Error::Planarity("boundary encloses no area".into()));
        }

        for (i, (a, b, name)) in segments.iter().enumerate() {
            for (c, d, other) in &segments[i + 1..] {
                let shared: Vec<usize> = [*a, *b]
                    .into_iter()
                    .filter(|v| *v == *c || *v == *d)
                    .collect();
                let conflict = match shared.len() {
                    0 => segments_touch(pos(*a), pos(*b), pos(*c), pos(*d)),
                    1 => {
                        // Meeting at a common endpoint is fine unless they overlap.
                        let s = shared[0];
                        let p = if *a == s { *b } else { *a };
                        let q = if *c == s { *d } else { *c };
                        on_segment(pos(s), pos(p), pos(q)) || on_segment(pos(s), pos(q), pos(p))
                    }
                    _ => true,
                };
                if conflict {
                    return Err(Error::Planarity(format!(
                        "{name} meets {other} away from a shared vertex"
                    )));
                }
            }
            for (v, vertex) in self.vertices.iter().enumerate() {
                if v != *a && v != *b && on_segment(pos(*a), pos(*b), &vertex.position) {
                    return Err(Error::Planarity(format!("vertex {v} lies on {name}")));
                }
            }
        }

        for (v, vertex) in self.vertices.iter().enumerate() {
            if vertex.interior && !self.strictly_inside(&vertex.position) {
                return Err(Error::Planarity(format!(
                    "interior vertex {v} is not inside the boundary"
                )));
            }
        }
        Ok(())
    }

    /// Even-odd test; points on the border are not inside.
    fn strictly_inside(&self, p: &Point) -> bool {
        let mut inside = false;
        for (a, b) in self.boundary_edges() {
            let (a, b) = (&self.vertices[a].position, &self.vertices[b].position);
            if on_segment(a, b, p) {
                return false;
            }
            if (a.y > p.y) != (b.y > p.y) {
                // x-coordinate where the edge crosses the horizontal through p.
                let x = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
                if p.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn creases(&self) -> &[(usize, usize)] {
        &self.creases
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn assignment(&self) -> Option<&MvAssignment> {
        self.assignment.as_ref()
    }

    pub fn label(&self, crease: usize) -> Option<MvLabel> {
        self.assignment.as_ref().map(|mv| mv.get(crease))
    }

    pub fn with_assignment(&self, assignment: Option<MvAssignment>) -> Result<Self> {
        if let Some(mv) = &assignment {
            mv.ensure_len(self.creases.len())?;
        }
        Ok(CreasePattern {
            assignment,
            ..self.clone()
        })
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.interior)
            .map(|(i, _)| i)
    }

    /// Crease ids incident to `v`, in crease order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        self.creases
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    /// The endpoint of `crease` that is not `v`.
    pub fn other_end(&self, crease: usize, v: usize) -> usize {
        let (a, b) = self.creases[crease];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Both endpoints in the interior of the paper.
    pub fn is_interior_crease(&self, crease: usize) -> bool {
        let (a, b) = self.creases[crease];
        self.vertices[a].interior && self.vertices[b].interior
    }

    /// Axis-aligned bounding box of the boundary as `(min, max)`.
    pub fn bounding_box(&self) -> ((f64, f64), (f64, f64)) {
        let pts: Vec<(f64, f64)> = self
            .boundary
            .iter()
            .map(|&b| self.vertices[b].position.to_f64())
            .collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&(f64, f64)) -> f64| {
            pts.iter().map(sel).fold(init, f)
        };
        (
            (
                fold(f64::min, f64::INFINITY, |p| p.0),
                fold(f64::min, f64::INFINITY, |p| p.1),
            ),
            (
                fold(f64::max, f64::NEG_INFINITY, |p| p.0),
                fold(f64::max, f64::NEG_INFINITY, |p| p.1),
            ),
        )
    }
}

fn cross_sum<'a>(pts: impl Iterator<Item = &'a Point> + Clone) -> BigRational {
    let v: Vec<&Point> = pts.collect();
    let m = v.len();
    (0..m).fold(BigRational::zero(), |acc, i| {
        let (a, b) = (v[i], v[(i + 1) % m]);
        acc + (&a.x * &b.y - &b.x * &a.y)
    })
}

/// Splits every crease with both endpoints on the boundary at its midpoint
/// with a new degree-2 interior vertex, flagged `split`. Both halves keep
/// the original label. Idempotent.
pub fn normalize_pattern(p: &CreasePattern) -> CreasePattern {
    let mut vertices = p.vertices.clone();
    let mut creases = Vec::with_capacity(p.creases.len());
    let mut labels = Vec::new();
    for (i, &(a, b)) in p.creases.iter().enumerate() {
        let label = p.label(i);
        if vertices[a].interior || vertices[b].interior {
            creases.push((a, b));
            labels.extend(label);
            continue;
        }
        let (pa, pb) = (&vertices[a].position, &vertices[b].position);
        let two = BigRational::from_integer(2.into());
        let mid = Point::new((&pa.x + &pb.x) / &two, (&pa.y + &pb.y) / &two);
        let m = vertices.len();
        vertices.push(Vertex {
            position: mid,
            interior: true,
            split: true,
        });
        creases.push((a, m));
        creases.push((m, b));
        labels.extend(label);
        labels.extend(label);
    }
    CreasePattern {
        vertices,
        creases,
        boundary: p.boundary.clone(),
        assignment: p.assignment.as_ref().map(|_| MvAssignment::new(labels)),
    }
}

/// Direction from a vertex along one crease, with its exact degree measure
/// when that is rational (multiples of 45 degrees).
#[derive(Clone, Debug)]
struct Direction {
    crease: usize,
    vector: Point,
    exact_degrees: Option<i64>,
}

impl Direction {
    fn new(crease: usize, vector: Point) -> Self {
        let (x, y) = (&vector.x, &vector.y);
        let zero = BigRational::zero();
        let exact_degrees = if y.is_zero() {
            Some(if x.is_positive() { 0 } else { 180 })
        } else if x.is_zero() {
            Some(if y.is_positive() { 90 } else { 270 })
        } else if x.abs() == y.abs() {
            Some(match (x > &zero, y > &zero) {
                (true, true) => 45,
                (false, true) => 135,
                (false, false) => 225,
                (true, false) => 315,
            })
        } else {
            None
        };
        Direction {
            crease,
            vector,
            exact_degrees,
        }
    }

    /// 0 for directions in [0°, 180°), 1 for [180°, 360°).
    fn half(&self) -> u8 {
        let (x, y) = (&self.vector.x, &self.vector.y);
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    }

    fn degrees_f64(&self) -> f64 {
        let (x, y) = self.vector.to_f64();
        y.atan2(x).to_degrees().rem_euclid(360.0)
    }

    fn ccw_cmp(&self, other: &Direction) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| {
            let o = Point::from_integers(0, 0);
            // Positive cross product: other lies counterclockwise of self.
            BigRational::zero().cmp(&cross(&o, &self.vector, &other.vector))
        })
    }
}

/// Creases around an interior vertex in counterclockwise order, starting
/// from the smallest direction angle, with the sector angles between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexStar {
    pub vertex: usize,
    pub creases: Vec<usize>,
    pub angles: AngleSequence,
}

pub fn star(p: &CreasePattern, v: usize) -> Result<VertexStar> {
    let vertex = p
        .vertices
        .get(v)
        .ok_or_else(|| Error::Structural(format!("vertex {v} out of range")))?;
    if !vertex.interior {
        return Err(Error::Unsupported(format!("vertex {v} is on the boundary")));
    }
    let mut dirs: Vec<Direction> = p
        .incident(v)
        .into_iter()
        .map(|c| {
            Direction::new(
                c,
                p.vertices[p.other_end(c, v)].position.sub(&vertex.position),
            )
        })
        .collect();
    if dirs.is_empty() {
        return Err(Error::Unsupported(format!("vertex {v} has no creases")));
    }
    dirs.sort_by(|a, b| a.ccw_cmp(b));

    let n = dirs.len();
    let mut exact = true;
    let mut angles = Vec::with_capacity(n);
    for i in 0..n {
        let (from, to) = (&dirs[i], &dirs[(i + 1) % n]);
        let angle = match (from.exact_degrees, to.exact_degrees) {
            (Some(a), Some(b)) => {
                let d = (b - a).rem_euclid(360);
                Angle::from_integer(if d == 0 { 360 } else { d })?
            }
            _ => {
                exact = false;
                let mut d = (to.degrees_f64() - from.degrees_f64()).rem_euclid(360.0);
                if n == 1 {
                    d = 360.0;
                }
                let r = BigRational::from_float(d).ok_or(Error::Inexact)?;
                Angle::new(r)?
            }
        };
        angles.push(angle);
    }
    let angles = if exact {
        AngleSequence::new(angles)?
    } else {
        AngleSequence::approximate(angles)?
    };
    Ok(VertexStar {
        vertex: v,
        creases: dirs.into_iter().map(|d| d.crease).collect(),
        angles,
    })
}

/// Consecutive angles between the creases at interior vertex `v`,
/// counterclockwise. Flagged approximate unless every crease direction is a
/// multiple of 45 degrees.
pub fn vertex_star(p: &CreasePattern, v: usize) -> Result<AngleSequence> {
    star(p, v).map(|s| s.angles)
}

/// Exact reflection composition around `v`: whether reflecting across each
/// crease line in counterclockwise order returns to the identity. For flat
/// paper this decides Kawasaki's condition exactly even when the angles
/// themselves are irrational.
pub fn exact_reflection_closure(p: &CreasePattern, v: usize) -> Result<bool> {
    let s = star(p, v)?;
    if s.creases.len() % 2 != 0 {
        return Ok(false);
    }
    let origin = &p.vertices[v].position;
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::zero();
    let mut m = [[one.clone(), zero.clone()], [zero, one.clone()]];
    for &c in &s.creases {
        let d = p.vertices[p.other_end(c, v)].position.sub(origin);
        let norm = &d.x * &d.x + &d.y * &d.y;
        let r = [
            [
                (&d.x * &d.x - &d.y * &d.y) / &norm,
                (&d.x * &d.y * BigRational::from_integer(2.into())) / &norm,
            ],
            [
                (&d.x * &d.y * BigRational::from_integer(2.into())) / &norm,
                (&d.y * &d.y - &d.x * &d.x) / &norm,
            ],
        ];
        m = [
            [
                &m[0][0] * &r[0][0] + &m[0][1] * &r[1][0],
                &m[0][0] * &r[0][1] + &m[0][1] * &r[1][1],
            ],
            [
                &m[1][0] * &r[0][0] + &m[1][1] * &r[1][0],
                &m[1][0] * &r[0][1] + &m[1][1] * &r[1][1],
            ],
        ];
    }
    Ok(m[0][0] == one && m[1][1] == one && m[0][1].is_zero() && m[1][0].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_integers(x, y)
    }

    fn square(extra: Vec<Point>, creases: Vec<(usize, usize)>) -> Result<CreasePattern> {
        let mut points = vec![pt(-2, -2), pt(2, -2), pt(2, 2), pt(-2, 2)];
        points.extend(extra);
        CreasePattern::new(points, creases, vec![0, 1, 2, 3], None)
    }

    /// Square with a centre vertex joined to the four edge midpoints.
    fn plus_pattern() -> CreasePattern {
        let points = vec![
            pt(-2, -2),
            pt(0, -2),
            pt(2, -2),
            pt(2, 0),
            pt(2, 2),
            pt(0, 2),
            pt(-2, 2),
            pt(-2, 0),
            pt(0, 0),
        ];
        CreasePattern::new(
            points,
            vec![(8, 3), (8, 5), (8, 7), (8, 1)],
            vec![0, 1, 2, 3, 4, 5, 6, 7],
            None,
        )
        .unwrap()
    }

    #[test]
    fn axis_star_is_exact() {
        let p = plus_pattern();
        let s = star(&p, 8).unwrap();
        assert_eq!(
            s.angles,
            AngleSequence::from_degrees(&[90, 90, 90, 90]).unwrap()
        );
        assert_eq!(s.creases, vec![0, 1, 2, 3]);
        assert!(s.angles.is_exact());
        assert_eq!(s.angles.kind(), crate::SequenceKind::Flat);
    }

    #[test]
    fn degree_one_star() {
        let p = square(vec![pt(0, 0)], vec![(4, 2)]).unwrap();
        assert_eq!(
            vertex_star(&p, 4).unwrap(),
            AngleSequence::from_degrees(&[360]).unwrap()
        );
    }

    #[test]
    fn boundary_vertex_star_is_unsupported() {
        let p = plus_pattern();
        assert!(matches!(vertex_star(&p, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn irrational_directions_are_approximate() {
        let points = vec![
            pt(-4, -4),
            pt(4, -4),
            pt(4, 4),
            pt(-4, 4),
            pt(0, 0),
            pt(1, 2),
        ];
        let p = CreasePattern::new(points, vec![(4, 5), (4, 0)], vec![0, 1, 2, 3], None).unwrap();
        let v = vertex_star(&p, 4).unwrap();
        assert!(!v.is_exact());
        assert!((v.total().to_f64().unwrap() - 360.0).abs() < 1e-9);
    }

    #[test]
    fn split_boundary_to_boundary_crease() {
        let points = vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(1, 2), pt(0, 2)];
        let p = CreasePattern::new(
            points,
            vec![(1, 4)],
            vec![0, 1, 2, 3, 4, 5],
            Some("M".parse().unwrap()),
        )
        .unwrap();
        let q = normalize_pattern(&p);
        assert_eq!(q.vertices().len(), 7);
        assert!(q.vertices()[6].interior && q.vertices()[6].split);
        assert_eq!(q.vertices()[6].position, pt(1, 1));
        assert_eq!(q.creases(), &[(1, 6), (6, 4)]);
        assert_eq!(q.assignment().unwrap().to_string(), "MM");
        assert_eq!(
            vertex_star(&q, 6).unwrap(),
            AngleSequence::from_degrees(&[180, 180]).unwrap()
        );
        assert_eq!(normalize_pattern(&q), q);
    }

    #[test]
    fn two_chords_give_two_split_vertices() {
        let points = vec![
            pt(0, 0),
            pt(1, 0),
            pt(3, 0),
            pt(4, 0),
            pt(4, 4),
            pt(3, 4),
            pt(1, 4),
            pt(0, 4),
        ];
        let p = CreasePattern::new(points, vec![(1, 6), (2, 5)], (0..8).collect(), None).unwrap();
        let q = normalize_pattern(&p);
        assert_eq!(q.vertices().iter().filter(|v| v.split).count(), 2);
        assert_eq!(q.creases().len(), 4);
    }

    #[test]
    fn interior_pattern_is_unchanged() {
        let p = plus_pattern();
        assert_eq!(normalize_pattern(&p), p);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            square(vec![pt(0, 0)], vec![(4, 4)]),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            square(vec![pt(0, 0)], vec![(4, 9)]),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            square(vec![pt(0, 0)], vec![(4, 0), (0, 4)]),
            Err(Error::Structural(_))
        ));
        assert!(matches!(
            square(vec![pt(2, 2)], vec![]),
            Err(Error::Structural(_))
        ));
        let mv: MvAssignment = "MM".parse().unwrap();
        assert!(matches!(
            CreasePattern::new(
                vec![pt(0, 0), pt(1, 0), pt(0, 1)],
                vec![],
                vec![0, 1, 2],
                Some(mv)
            ),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn planarity_errors() {
        // Two diagonals crossing without a shared vertex.
        assert!(matches!(
            square(vec![], vec![(0, 2), (1, 3)]),
            Err(Error::Planarity(_))
        ));
        // A crease running along the border.
        assert!(matches!(
            square(vec![], vec![(0, 1)]),
            Err(Error::Planarity(_))
        ));
        // Interior vertex outside the paper.
        assert!(matches!(
            square(vec![pt(5, 5)], vec![]),
            Err(Error::Planarity(_))
        ));
        // Vertex in the middle of a crease.
        assert!(matches!(
            square(vec![pt(0, 0)], vec![(0, 2)]),
            Err(Error::Planarity(_))
        ));
        // Collinear overlapping creases from a shared vertex.
        assert!(matches!(
            square(vec![pt(0, 0), pt(1, 1)], vec![(4, 2), (4, 5)]),
            Err(Error::Planarity(_))
        ));
    }

    #[test]
    fn exact_reflection_matches_exact_angles() {
        let p = plus_pattern();
        assert!(exact_reflection_closure(&p, 8).unwrap());
        // (3,1),(−1,3),(−3,−1),(1,−3): four creases at 90° spacing, irrational angles.
        let points = vec![
            pt(-4, -4),
            pt(4, -4),
            pt(4, 4),
            pt(-4, 4),
            pt(0, 0),
            pt(3, 1),
            pt(-1, 3),
            pt(-3, -1),
            pt(1, -3),
        ];
        let q = CreasePattern::new(
            points,
            vec![(4, 5), (4, 6), (4, 7), (4, 8), (5, 2)],
            vec![0, 1, 2, 3],
            None,
        );
        // (5,2) runs to a corner; (6..8) dangle as interior vertices of degree 1.
        let q = q.unwrap();
        assert!(!vertex_star(&q, 4).unwrap().is_exact());
        assert!(exact_reflection_closure(&q, 4).unwrap());
    }
}
