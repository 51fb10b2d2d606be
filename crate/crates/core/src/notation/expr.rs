//! Knot expressions: named table knots, family members, and literal PD codes,
//! composed with `#` (connected sum).
//!
//! ```text
//! expr := term ('#' term)*
//! term := 'U' | 'hopf' '-'? | 'K' '[' INT ']' | NAME '!'? | PD-literal
//! ```
//!
//! `!` mirrors a named knot.  Connected-sum operands must be knots (one
//! component); the sum of diagrams is well defined only up to the choice of
//! component otherwise.

use std::fmt;

use super::pd::{parse_pd_at, render_pd, Scanner};
use super::table::KnotTable;
use super::tangle::{hopf_link, km_diagram};
use super::NotationError;
use crate::diagram::PlanarDiagram;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Named { name: String, mirror: bool },
    /// `K[m]`: the m-th member of the bundled twisted family.
    Km(i64),
    Hopf { positive: bool },
    Literal(PlanarDiagram),
    Sum(Vec<KnotExpr>),
}

pub fn parse_expr(input: &str) -> Result<KnotExpr, NotationError> {
    let mut sc = Scanner::new(input);
    let mut terms = vec![parse_term(&mut sc)?];
    while sc.eat(b'#') {
        terms.push(parse_term(&mut sc)?);
    }
    sc.finished()?;
    Ok(if terms.len() == 1 { terms.pop().unwrap() } else { KnotExpr::Sum(terms) })
}

fn parse_term(sc: &mut Scanner) -> Result<KnotExpr, NotationError> {
    if sc.peek() == Some(b'P') {
        return Ok(KnotExpr::Literal(parse_pd_at(sc)?));
    }
    let name = sc.name()?.to_owned();
    match name.as_str() {
        "U" => Ok(KnotExpr::Unknot),
        "hopf" => Ok(KnotExpr::Hopf { positive: !sc.eat(b'-') }),
        "K" if sc.peek() == Some(b'[') => {
            sc.expect("[")?;
            let m = sc.signed_integer()?;
            sc.expect("]")?;
            Ok(KnotExpr::Km(m))
        }
        _ => Ok(KnotExpr::Named { name, mirror: sc.eat(b'!') }),
    }
}

impl KnotExpr {
    /// Build the diagram this expression denotes, resolving names in `table`.
    pub fn resolve(&self, table: &KnotTable) -> Result<PlanarDiagram, NotationError> {
        match self {
            KnotExpr::Unknot => Ok(PlanarDiagram::unknot()),
            KnotExpr::Named { name, mirror } => {
                let entry = table
                    .get(name)
                    .ok_or_else(|| NotationError::UnknownName(name.clone()))?;
                let d = entry.diagram()?;
                Ok(if *mirror { d.mirror() } else { d })
            }
            KnotExpr::Km(m) => Ok(km_diagram(*m)),
            KnotExpr::Hopf { positive } => Ok(hopf_link(*positive)),
            KnotExpr::Literal(d) => Ok(d.clone()),
            KnotExpr::Sum(terms) => {
                let mut acc: Option<PlanarDiagram> = None;
                for term in terms {
                    let d = term.resolve(table)?;
                    if d.component_count() != 1 {
                        return Err(NotationError::SumOfLink {
                            name: term.to_string(),
                            components: d.component_count(),
                        });
                    }
                    acc = Some(match acc {
                        None => d,
                        Some(a) => a.connected_sum(&d),
                    });
                }
                Ok(acc.expect("a sum has at least one term"))
            }
        }
    }

    /// The expression's summands: the terms of a sum, or the expression itself.
    pub fn summands(&self) -> &[KnotExpr] {
        match self {
            KnotExpr::Sum(terms) => terms,
            _ => std::slice::from_ref(self),
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => write!(f, "U"),
            KnotExpr::Named { name, mirror } => {
                write!(f, "{name}{}", if *mirror { "!" } else { "" })
            }
            KnotExpr::Km(m) => write!(f, "K[{m}]"),
            KnotExpr::Hopf { positive } => write!(f, "hopf{}", if *positive { "" } else { "-" }),
            KnotExpr::Literal(d) => match render_pd(d) {
                Ok(code) => write!(f, "{code}"),
                Err(_) => write!(f, "<diagram with {} crossings>", d.crossing_count()),
            },
            KnotExpr::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, "#")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_table() -> KnotTable {
        KnotTable::parse(concat!(
            r#"{"name":"3_1","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"components":1,"u":[1,1],"u2":1,"bu":1}"#,
            "\n",
            r#"{"name":"4_1","pd":[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]],"components":1,"u":[1,1],"u2":2,"bu":2}"#,
            "\n",
        ))
        .unwrap()
    }

    #[test]
    fn parses_terms() {
        assert_eq!(parse_expr("U").unwrap(), KnotExpr::Unknot);
        assert_eq!(
            parse_expr(" 3_1 ! ").unwrap(),
            KnotExpr::Named { name: "3_1".into(), mirror: true }
        );
        assert_eq!(parse_expr("K[-7]").unwrap(), KnotExpr::Km(-7));
        assert_eq!(parse_expr("hopf-").unwrap(), KnotExpr::Hopf { positive: false });
        assert!(matches!(parse_expr("PD[X(1,1,2,2)]").unwrap(), KnotExpr::Literal(_)));
    }

    #[test]
    fn parses_sums() {
        let e = parse_expr("3_1 # 3_1! # K[2]").unwrap();
        assert_eq!(e.summands().len(), 3);
        assert_eq!(e.to_string(), "3_1#3_1!#K[2]");
    }

    #[test]
    fn display_round_trips() {
        for text in ["U", "3_1!", "K[12]", "hopf-", "3_1#4_1", "PD[]"] {
            let e = parse_expr(text).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_expr("").is_err());
        assert!(parse_expr("3_1 # ").is_err());
        assert!(parse_expr("3_1 extra").is_err());
        assert!(parse_expr("K[a]").is_err());
    }

    #[test]
    fn resolves_against_a_table() {
        let table = tiny_table();
        let d = parse_expr("3_1#4_1").unwrap().resolve(&table).unwrap();
        assert_eq!(d.crossing_count(), 7);
        assert_eq!(d.component_count(), 1);
        let mirror = parse_expr("3_1!").unwrap().resolve(&table).unwrap();
        assert_eq!(mirror, parse_expr("3_1").unwrap().resolve(&table).unwrap().mirror());
        assert!(matches!(
            parse_expr("9_99").unwrap().resolve(&table),
            Err(NotationError::UnknownName(_))
        ));
    }

    #[test]
    fn sums_require_knot_operands() {
        let table = tiny_table();
        let err = parse_expr("hopf#3_1").unwrap().resolve(&table).unwrap_err();
        assert!(matches!(err, NotationError::SumOfLink { components: 2, .. }));
    }
}
