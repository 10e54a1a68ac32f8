//! Family expressions for the `gen` subcommand.
//!
//! Grammar over positional tokens:
//!
//! ```text
//! expr := simplex D | cube D | cross D | polygon N
//!       | point | segment | square
//!       | pyramid expr | prism expr | join expr expr
//! ```
//!
//! Joins and pyramids at the top level record their factor vertex sets so the
//! join checks can find them later.

use gpoly_core::geometry::{cross_polytope, cube, join, polygon, prism, simplex};
use gpoly_core::Polytope;

use crate::CliError;

pub struct Generated {
    pub name: String,
    pub polytope: Polytope,
    pub join_faces: Option<Vec<Vec<usize>>>,
}

pub fn parse_family(tokens: &[String]) -> Result<Generated, CliError> {
    let mut iter = tokens.iter().map(String::as_str);
    let generated = parse_expr(&mut iter)?;
    if let Some(extra) = iter.next() {
        return Err(CliError::BadParams(format!(
            "unexpected trailing token {:?}",
            extra
        )));
    }
    Ok(generated)
}

fn parse_expr<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<Generated, CliError> {
    let head = tokens
        .next()
        .ok_or_else(|| CliError::BadParams("missing family name".to_string()))?;
    let simple = |name: String, polytope: Polytope| Generated {
        name,
        polytope,
        join_faces: None,
    };
    match head {
        "simplex" => {
            let d = parse_number(tokens, "simplex", 0, 6)?;
            Ok(simple(format!("simplex{}", d), simplex(d)))
        }
        "cube" => {
            let d = parse_number(tokens, "cube", 0, 6)?;
            Ok(simple(format!("cube{}", d), cube(d)))
        }
        "cross" => {
            let d = parse_number(tokens, "cross", 1, 6)?;
            Ok(simple(format!("cross{}", d), cross_polytope(d)))
        }
        "polygon" => {
            let n = parse_number(tokens, "polygon", 3, 64)?;
            Ok(simple(format!("polygon{}", n), polygon(n)))
        }
        "point" => Ok(simple("point".to_string(), simplex(0))),
        "segment" => Ok(simple("segment".to_string(), simplex(1))),
        "square" => Ok(simple("square".to_string(), cube(2))),
        "pyramid" => {
            let base = parse_expr(tokens)?;
            let apex = simplex(0);
            let polytope = join(&apex, &base.polytope);
            let nb = base.polytope.n_vertices();
            Ok(Generated {
                name: format!("pyramid_{}", base.name),
                polytope,
                join_faces: Some(vec![vec![0], (1..=nb).collect()]),
            })
        }
        "prism" => {
            let base = parse_expr(tokens)?;
            Ok(simple(format!("prism_{}", base.name), prism(&base.polytope)))
        }
        "join" => {
            let left = parse_expr(tokens)?;
            let right = parse_expr(tokens)?;
            let polytope = join(&left.polytope, &right.polytope);
            let nl = left.polytope.n_vertices();
            let nr = right.polytope.n_vertices();
            Ok(Generated {
                name: format!("join_{}_{}", left.name, right.name),
                polytope,
                join_faces: Some(vec![(0..nl).collect(), (nl..nl + nr).collect()]),
            })
        }
        other => Err(CliError::UnknownFamily(other.to_string())),
    }
}

fn parse_number<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
    family: &str,
    min: usize,
    max: usize,
) -> Result<usize, CliError> {
    let token = tokens
        .next()
        .ok_or_else(|| CliError::BadParams(format!("{} needs a numeric parameter", family)))?;
    let value: usize = token
        .parse()
        .map_err(|_| CliError::BadParams(format!("{}: bad parameter {:?}", family, token)))?;
    if value < min || value > max {
        return Err(CliError::BadParams(format!(
            "{}: parameter {} outside {}..={}",
            family, value, min, max
        )));
    }
    Ok(value)
}
