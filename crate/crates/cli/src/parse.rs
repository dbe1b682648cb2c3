//! Angle lists and JSON crease pattern files.

use flatfold::{normalize_pattern, Angle, AngleSequence, CreasePattern, MvAssignment, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::CliError;

/// Parses one rational: an integer, a finite decimal or `p/q`.
pub fn parse_rational(token: &str) -> Result<BigRational, String> {
    let token = token.trim();
    if let Some((p, q)) = token.split_once('/') {
        let p = parse_rational(p)?;
        let q = parse_rational(q)?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(p / q);
    }
    let (sign, body) = match token.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, token.strip_prefix('+').unwrap_or(token)),
    };
    let (mantissa, exponent) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (
            m,
            e.parse::<i32>()
                .map_err(|_| format!("bad exponent in {token:?}"))?,
        ),
        None => (body, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int}{frac}");
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{token:?} is not a number"));
    }
    let numer: BigInt = digits.parse().expect("digits only");
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Parses a comma- and/or whitespace-separated list of positive angles in
/// degrees. Errors name the 1-based position of the offending token.
pub fn parse_angles(text: &str) -> Result<AngleSequence, CliError> {
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(CliError::Parse("no angles given".into()));
    }
    let angles = tokens
        .iter()
        .enumerate()
        .map(|(i, tok)| {
            let value = parse_rational(tok)
                .map_err(|e| CliError::Parse(format!("angle {}: {e}", i + 1)))?;
            Angle::new(value).map_err(|e| CliError::Parse(format!("angle {} ({tok}): {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    AngleSequence::new(angles).map_err(|e| CliError::Parse(e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Number(serde_json::Number),
    Text(String),
}

impl Coord {
    fn value(&self) -> Result<BigRational, String> {
        match self {
            // Shortest round-trip rendering, so 0.1 reads as 1/10.
            Coord::Number(n) => parse_rational(&n.to_string()),
            Coord::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PatternFile {
    vertices: Vec<[Coord; 2]>,
    creases: Vec<[usize; 2]>,
    boundary: Vec<usize>,
    #[serde(default)]
    assignment: Option<Vec<String>>,
}

/// Reads a crease pattern document and returns it validated and
/// normalized.
pub fn parse_pattern(json: &str) -> Result<CreasePattern, CliError> {
    let file: PatternFile =
        serde_json::from_str(json).map_err(|e| CliError::Parse(format!("schema error: {e}")))?;
    let points = file
        .vertices
        .iter()
        .enumerate()
        .map(|(i, [x, y])| {
            let at = |e: String| CliError::Parse(format!("schema error: vertex {i}: {e}"));
            Ok(Point::new(x.value().map_err(at)?, y.value().map_err(at)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let assignment = match file.assignment {
        Some(labels) => {
            if let Some((i, bad)) = labels.iter().enumerate().find(|(_, l)| l.len() != 1) {
                return Err(CliError::Parse(format!(
                    "schema error: assignment {i} is {bad:?}, expected \"M\" or \"V\""
                )));
            }
            let mv: MvAssignment = labels
                .concat()
                .parse()
                .map_err(|e| CliError::Parse(format!("schema error: {e}")))?;
            Some(mv)
        }
        None => None,
    };
    let creases = file.creases.iter().map(|&[a, b]| (a, b)).collect();
    let pattern =
        CreasePattern::new(points, creases, file.boundary, assignment).map_err(|e| match e {
            flatfold::Error::Planarity(_) => CliError::Parse(e.to_string()),
            other => CliError::Parse(format!("schema error: {other}")),
        })?;
    Ok(normalize_pattern(&pattern))
}

/// Exact text of a rational: `p` or `p/q`.
pub fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("22.5").unwrap(), r(45, 2));
        assert_eq!(parse_rational("90").unwrap(), r(90, 1));
        assert_eq!(parse_rational("1/3").unwrap(), r(1, 3));
        assert_eq!(parse_rational("-0.125").unwrap(), r(-1, 8));
        assert_eq!(parse_rational("1e2").unwrap(), r(100, 1));
        assert_eq!(parse_rational("2.5/0.5").unwrap(), r(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn angle_lists() {
        let v = parse_angles("90,90,90,90").unwrap();
        assert_eq!(v, AngleSequence::from_degrees(&[90, 90, 90, 90]).unwrap());
        let v = parse_angles("20 10 40 50 60 60 60 60").unwrap();
        assert_eq!(
            v,
            AngleSequence::from_degrees(&[20, 10, 40, 50, 60, 60, 60, 60]).unwrap()
        );
        let v = parse_angles(" 22.5, 157.5 ,  1/2  359/2 ").unwrap();
        assert_eq!(v.angles()[0].degrees(), &r(45, 2));
        assert_eq!(v.angles()[3].degrees(), &r(359, 2));
    }

    #[test]
    fn angle_errors_name_position() {
        let e = parse_angles("0,180,180").unwrap_err().to_string();
        assert!(e.contains("angle 1") && e.contains("positive"), "{e}");
        let e = parse_angles("90, 90, x9, 90").unwrap_err().to_string();
        assert!(e.contains("angle 3"), "{e}");
        assert!(parse_angles(" , ").is_err());
    }

    const SQUARE: &str = r#"{
        "vertices": [[0,0],[1,0],[1,1],[0,1],["1/2","0.5"]],
        "creases": [[4,0],[4,1],[4,2],[4,3]],
        "boundary": [0,1,2,3]
    }"#;

    #[test]
    fn square_with_centre() {
        let p = parse_pattern(SQUARE).unwrap();
        assert_eq!(p.interior_vertices().collect::<Vec<_>>(), vec![4]);
        assert_eq!(p.degree(4), 4);
        assert!(p.assignment().is_none());
    }

    #[test]
    fn pattern_is_normalized() {
        let json = r#"{"vertices": [[0,0],[2,0],[2,2],[0,2],[1,0],[1,2]],
                       "creases": [[4,5]], "boundary": [0,4,1,2,5,3], "assignment": ["v"]}"#;
        let p = parse_pattern(json).unwrap();
        assert_eq!(p.creases().len(), 2);
        assert_eq!(p.assignment().unwrap().to_string(), "VV");
    }

    #[test]
    fn pattern_errors() {
        let wrong_len = SQUARE.replace("\"boundary\"", "\"assignment\": [\"M\"], \"boundary\"");
        assert!(parse_pattern(&wrong_len)
            .unwrap_err()
            .to_string()
            .contains("schema"));
        let crossing = r#"{"vertices": [[0,0],[2,0],[2,2],[0,2]],
                           "creases": [[0,2],[1,3]], "boundary": [0,1,2,3]}"#;
        assert!(parse_pattern(crossing)
            .unwrap_err()
            .to_string()
            .contains("planar"));
        let out_of_range = SQUARE.replace("[4,3]", "[4,9]");
        assert!(parse_pattern(&out_of_range)
            .unwrap_err()
            .to_string()
            .contains("schema"));
        assert!(parse_pattern("{\"vertices\": []}")
            .unwrap_err()
            .to_string()
            .contains("schema"));
        let bad_label = SQUARE.replace(
            "\"boundary\"",
            "\"assignment\": [\"M\",\"M\",\"X\",\"V\"], \"boundary\"",
        );
        assert!(parse_pattern(&bad_label).is_err());
    }
}
