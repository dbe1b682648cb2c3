//! Necessary conditions for multi-vertex crease patterns: Kawasaki at every
//! interior vertex, reflection composition along closed curves and the
//! generalized Maekawa identity M − V = 2U − 2D − Mᵢ + Vᵢ.
//!
//! None of these decide global flat-foldability; every report produced here
//! is labelled [`NECESSARY_ONLY`].

use serde::Serialize;

use crate::crease_pattern::{exact_reflection_closure, star, CreasePattern};
use crate::error::{Error, Result};
use crate::vertex::kawasaki;

/// Scope label attached to every multi-vertex report.
pub const NECESSARY_ONLY: &str = "necessary only";

/// Largest entry-wise deviation from the identity accepted by
/// [`reflection_trace`].
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

/// Affine isometry `p ↦ linear·p + translation`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ReflectionMap {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
}

impl ReflectionMap {
    pub fn identity() -> Self {
        ReflectionMap {
            linear: [[1.0, 0.0], [0.0, 1.0]],
            translation: [0.0, 0.0],
        }
    }

    /// Reflection across the line through `point` with direction `dir`.
    pub fn across_line(point: (f64, f64), dir: (f64, f64)) -> Self {
        let len = dir.0.hypot(dir.1);
        let (ux, uy) = (dir.0 / len, dir.1 / len);
        let linear = [
            [2.0 * ux * ux - 1.0, 2.0 * ux * uy],
            [2.0 * ux * uy, 2.0 * uy * uy - 1.0],
        ];
        let mapped = (
            linear[0][0] * point.0 + linear[0][1] * point.1,
            linear[1][0] * point.0 + linear[1][1] * point.1,
        );
        ReflectionMap {
            linear,
            translation: [point.0 - mapped.0, point.1 - mapped.1],
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &ReflectionMap) -> Self {
        let a = &self.linear;
        let b = &other.linear;
        let mut linear = [[0.0; 2]; 2];
        for (i, row) in linear.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let t = other.translation;
        let translation = [
            a[0][0] * t[0] + a[0][1] * t[1] + self.translation[0],
            a[1][0] * t[0] + a[1][1] * t[1] + self.translation[1],
        ];
        ReflectionMap {
            linear,
            translation,
        }
    }

    pub fn apply(&self, p: (f64, f64)) -> (f64, f64) {
        let m = &self.linear;
        (
            m[0][0] * p.0 + m[0][1] * p.1 + self.translation[0],
            m[1][0] * p.0 + m[1][1] * p.1 + self.translation[1],
        )
    }

    pub fn determinant(&self) -> f64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    /// Largest absolute entry of `self − identity`, translation included.
    pub fn identity_deviation(&self) -> f64 {
        let m = &self.linear;
        [
            m[0][0] - 1.0,
            m[0][1],
            m[1][0],
            m[1][1] - 1.0,
            self.translation[0],
            self.translation[1],
        ]
        .iter()
        .fold(0.0, |acc: f64, x| acc.max(x.abs()))
    }

    /// Counterclockwise rotation angle of the linear part in (−180, 180].
    pub fn rotation_degrees(&self) -> f64 {
        self.linear[1][0].atan2(self.linear[0][0]).to_degrees()
    }
}

/// Reflection across the full line through `crease`.
pub fn reflection(crease: usize, p: &CreasePattern) -> Result<ReflectionMap> {
    let &(a, b) = p
        .creases()
        .get(crease)
        .ok_or_else(|| Error::Structural(format!("crease {crease} out of range")))?;
    let pa = p.vertices()[a].position.to_f64();
    let pb = p.vertices()[b].position.to_f64();
    let dir = (pb.0 - pa.0, pb.1 - pa.1);
    if dir == (0.0, 0.0) {
        return Err(Error::Structural(format!(
            "crease {crease} has zero length"
        )));
    }
    Ok(ReflectionMap::across_line(pa, dir))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crossing {
    pub crease: usize,
    pub point: (f64, f64),
}

/// A closed curve on the crease pattern, recorded by the creases it
/// crosses in order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedCurve {
    pub crossings: Vec<Crossing>,
    pub vertex_avoiding: bool,
}

impl ClosedCurve {
    pub fn through(crossings: Vec<Crossing>) -> Self {
        ClosedCurve {
            crossings,
            vertex_avoiding: true,
        }
    }

    pub fn creases(&self) -> Vec<usize> {
        self.crossings.iter().map(|c| c.crease).collect()
    }
}

fn distance_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
    (p.0 - cx).hypot(p.1 - cy)
}

/// A small circle around interior vertex `v` crossing exactly its creases in
/// counterclockwise order. The radius is half the distance to the nearest
/// other vertex or non-incident crease.
pub fn curve_around_vertex(p: &CreasePattern, v: usize) -> Result<ClosedCurve> {
    let s = star(p, v)?;
    let centre = p.vertices()[v].position.to_f64();
    let mut clearance = f64::INFINITY;
    for (u, vertex) in p.vertices().iter().enumerate() {
        if u != v {
            let q = vertex.position.to_f64();
            clearance = clearance.min((q.0 - centre.0).hypot(q.1 - centre.1));
        }
    }
    let boundary = p.boundary();
    let edges = (0..boundary.len()).map(|i| (boundary[i], boundary[(i + 1) % boundary.len()]));
    for (a, b) in p
        .creases()
        .iter()
        .copied()
        .filter(|&(a, b)| a != v && b != v)
        .chain(edges)
    {
        let pa = p.vertices()[a].position.to_f64();
        let pb = p.vertices()[b].position.to_f64();
        clearance = clearance.min(distance_to_segment(centre, pa, pb));
    }
    let radius = clearance / 2.0;
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::Structural(format!(
            "no room for a curve around vertex {v}"
        )));
    }
    let crossings = s
        .creases
        .iter()
        .map(|&c| {
            let q = p.vertices()[p.other_end(c, v)].position.to_f64();
            let (dx, dy) = (q.0 - centre.0, q.1 - centre.1);
            let len = dx.hypot(dy);
            Crossing {
                crease: c,
                point: (centre.0 + radius * dx / len, centre.1 + radius * dy / len),
            }
        })
        .collect();
    Ok(ClosedCurve {
        crossings,
        vertex_avoiding: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceVerdict {
    Identity,
    NotIdentity,
    /// An odd number of crossings composes to a reflection, never the identity.
    OrientationReversing,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReflectionTrace {
    pub map: ReflectionMap,
    pub verdict: TraceVerdict,
    pub deviation: f64,
}

impl ReflectionTrace {
    pub fn is_identity(&self) -> bool {
        self.verdict == TraceVerdict::Identity
    }
}

/// Composes the reflections across the creases `curve` crosses, in order,
/// as `R(l₁)R(l₂)⋯R(lₙ)`. The identity is necessary for flat-foldability.
pub fn reflection_trace(p: &CreasePattern, curve: &ClosedCurve) -> Result<ReflectionTrace> {
    if curve.crossings.is_empty() {
        return Err(Error::Structural("curve crosses no creases".into()));
    }
    if !curve.vertex_avoiding {
        return Err(Error::Structural("curve passes through a vertex".into()));
    }
    let mut map = ReflectionMap::identity();
    for c in &curve.crossings {
        map = map.compose(&reflection(c.crease, p)?);
    }
    let deviation = map.identity_deviation();
    let verdict = if !curve.crossings.len().is_multiple_of(2) {
        TraceVerdict::OrientationReversing
    } else if deviation <= IDENTITY_TOLERANCE {
        TraceVerdict::Identity
    } else {
        TraceVerdict::NotIdentity
    };
    Ok(ReflectionTrace {
        map,
        verdict,
        deviation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexKawasaki {
    pub vertex: usize,
    pub degree: usize,
    /// Sector angles as text; approximate ones are decimal renderings.
    pub angles: Vec<String>,
    pub approximate_angles: bool,
    pub split: bool,
    pub holds: bool,
}

/// Kawasaki's condition at every interior vertex. Exact angle sequences are
/// tested directly; when the angles are not rational the vertex is flagged
/// and decided by exact reflection composition instead.
pub fn local_kawasaki_all(p: &CreasePattern) -> Vec<VertexKawasaki> {
    p.interior_vertices()
        .map(|v| {
            let split = p.vertices()[v].split;
            match star(p, v) {
                Ok(s) => {
                    let holds = if s.angles.is_exact() {
                        kawasaki(&s.angles)
                    } else {
                        exact_reflection_closure(p, v).unwrap_or(false)
                    };
                    let angles = s
                        .angles
                        .angles()
                        .iter()
                        .map(|a| {
                            if s.angles.is_exact() {
                                a.to_string()
                            } else {
                                format!("{:.6}", a.to_f64())
                            }
                        })
                        .collect();
                    VertexKawasaki {
                        vertex: v,
                        degree: s.creases.len(),
                        angles,
                        approximate_angles: !s.angles.is_exact(),
                        split,
                        holds,
                    }
                }
                Err(_) => VertexKawasaki {
                    vertex: v,
                    degree: 0,
                    angles: Vec::new(),
                    approximate_angles: false,
                    split,
                    holds: false,
                },
            }
        })
        .collect()
}

/// Crease and vertex tallies of a labelled pattern.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PatternTally {
    pub mountains: usize,
    pub valleys: usize,
    pub interior_mountains: usize,
    pub interior_valleys: usize,
    pub up: usize,
    pub down: usize,
    /// Split vertices among `up + down`.
    pub split_vertices: usize,
}

impl PatternTally {
    pub fn lhs(&self) -> i64 {
        self.mountains as i64 - self.valleys as i64
    }

    pub fn rhs(&self) -> i64 {
        2 * self.up as i64 - 2 * self.down as i64 - self.interior_mountains as i64
            + self.interior_valleys as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MaekawaOutcome {
    Evaluated {
        tally: PatternTally,
        holds: bool,
    },
    /// Interior vertices whose local M − V is not ±2, with that value.
    LocalViolation {
        vertices: Vec<(usize, i64)>,
    },
}

/// Local M − V at an interior vertex.
pub fn local_tally(p: &CreasePattern, v: usize) -> Option<i64> {
    let mv = p.assignment()?;
    Some(p.incident(v).into_iter().map(|c| mv.get(c).sign()).sum())
}

/// Evaluates M − V = 2U − 2D − Mᵢ + Vᵢ on a normalized, labelled pattern.
/// Up and down vertices are classified by their local M − V; split vertices
/// count among them like any other interior vertex.
pub fn generalized_maekawa(p: &CreasePattern) -> Result<MaekawaOutcome> {
    let mv = p
        .assignment()
        .ok_or_else(|| Error::Unsupported("generalized Maekawa needs an assignment".into()))?;
    let mut tally = PatternTally::default();
    let mut violations = Vec::new();
    for v in p.interior_vertices() {
        let local = local_tally(p, v).unwrap_or(0);
        match local {
            2 => tally.up += 1,
            -2 => tally.down += 1,
            _ => {
                violations.push((v, local));
                continue;
            }
        }
        if p.vertices()[v].split {
            tally.split_vertices += 1;
        }
    }
    if !violations.is_empty() {
        return Ok(MaekawaOutcome::LocalViolation {
            vertices: violations,
        });
    }
    for (c, label) in mv.labels().iter().enumerate() {
        let interior = p.is_interior_crease(c);
        match (label.sign() > 0, interior) {
            (true, true) => {
                tally.mountains += 1;
                tally.interior_mountains += 1;
            }
            (true, false) => tally.mountains += 1,
            (false, true) => {
                tally.valleys += 1;
                tally.interior_valleys += 1;
            }
            (false, false) => tally.valleys += 1,
        }
    }
    let holds = tally.lhs() == tally.rhs();
    Ok(MaekawaOutcome::Evaluated { tally, holds })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexTrace {
    pub vertex: usize,
    pub creases: Vec<usize>,
    pub trace: Option<ReflectionTrace>,
    pub error: Option<String>,
}

/// Every necessary check the pattern module knows, gathered in one place.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatternReport {
    pub scope: &'static str,
    /// Always `None`: passing every check here is not a foldability proof.
    pub foldable: Option<bool>,
    pub kawasaki: Vec<VertexKawasaki>,
    pub reflection_traces: Vec<VertexTrace>,
    pub maekawa: Option<MaekawaOutcome>,
    pub all_necessary_checks_pass: bool,
}

pub fn check_pattern(p: &CreasePattern) -> PatternReport {
    let kawasaki = local_kawasaki_all(p);
    let reflection_traces: Vec<VertexTrace> = p
        .interior_vertices()
        .map(|v| {
            match curve_around_vertex(p, v)
                .and_then(|c| Ok((c.creases(), reflection_trace(p, &c)?)))
            {
                Ok((creases, trace)) => VertexTrace {
                    vertex: v,
                    creases,
                    trace: Some(trace),
                    error: None,
                },
                Err(e) => VertexTrace {
                    vertex: v,
                    creases: Vec::new(),
                    trace: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let maekawa = p
        .assignment()
        .map(|_| generalized_maekawa(p).expect("assignment present"));
    let all_necessary_checks_pass = kawasaki.iter().all(|k| k.holds)
        && reflection_traces
            .iter()
            .all(|t| t.trace.as_ref().is_some_and(|t| t.is_identity()))
        && maekawa
            .as_ref()
            .is_none_or(|m| matches!(m, MaekawaOutcome::Evaluated { holds: true, .. }));
    PatternReport {
        scope: NECESSARY_ONLY,
        foldable: None,
        kawasaki,
        reflection_traces,
        maekawa,
        all_necessary_checks_pass,
    }
}
