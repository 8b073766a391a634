//! The line-oriented input document: a ring declaration, optionally an
//! ideal and a matrix.
//!
//! ```text
//! # comments run to end of line
//! ring 101 [x,y,z]
//! ideal: x^3+y^2+1; z^3-x^2-y^2+2
//! matrix 2x2: x, y; 1, x
//! ```
//!
//! `ring p^k [vars]` declares an extension field; its modulus is drawn
//! deterministically from the job seed. Statements may wrap across lines;
//! a new statement starts at a line beginning with a keyword.

use varpoints::error::{Error, Result};
use varpoints::ff::{make_extension, make_prime_field, FqField};
use varpoints::parse::parse_polynomial;
use varpoints::poly::{PolyMatrix, PolyRing, Polynomial};
use varpoints::rng::seeded_rng;

/// A parsed input document, bound to a concrete ring.
#[derive(Debug)]
pub struct InputDoc {
    pub field: FqField,
    pub ring: PolyRing,
    pub ideal_gens: Option<Vec<Polynomial>>,
    pub matrix: Option<PolyMatrix>,
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

struct Statement {
    keyword: &'static str,
    line: usize,
    body: String,
}

fn split_statements(text: &str) -> Result<Vec<Statement>> {
    let mut statements: Vec<Statement> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let keyword = ["ring", "ideal", "matrix"].into_iter().find(|k| {
            trimmed.starts_with(k) && {
                let rest = &trimmed[k.len()..];
                rest.is_empty() || rest.starts_with([' ', '\t', ':'])
            }
        });
        match keyword {
            Some(k) => statements.push(Statement {
                keyword: k,
                line: line_no,
                body: trimmed[k.len()..].trim().to_string(),
            }),
            None => match statements.last_mut() {
                Some(stmt) => {
                    stmt.body.push(' ');
                    stmt.body.push_str(trimmed);
                }
                None => {
                    return Err(parse_err(line_no, 1, "expected a ring declaration"));
                }
            },
        }
    }
    Ok(statements)
}

/// `ring <p>[^<k>] [v1,v2,...]`
fn parse_ring_decl(body: &str, line: usize, seed: u64) -> Result<(FqField, PolyRing)> {
    let open = body
        .find('[')
        .ok_or_else(|| parse_err(line, 1, "ring declaration needs a [vars] list"))?;
    let close = body
        .rfind(']')
        .filter(|&c| c > open)
        .ok_or_else(|| parse_err(line, 1, "unterminated variable list"))?;
    if !body[close + 1..].trim().is_empty() {
        return Err(parse_err(line, 1, "trailing input after variable list"));
    }
    let head = body[..open].trim();
    let (p_txt, k_txt) = match head.split_once('^') {
        Some((p, k)) => (p.trim(), Some(k.trim())),
        None => (head, None),
    };
    let p: u64 = p_txt
        .parse()
        .map_err(|_| parse_err(line, 1, format!("invalid characteristic `{p_txt}`")))?;
    let base = make_prime_field(p)?;
    let field = match k_txt {
        None => base,
        Some(k_txt) => {
            let k: usize = k_txt
                .parse()
                .map_err(|_| parse_err(line, 1, format!("invalid extension degree `{k_txt}`")))?;
            if k == 0 {
                return Err(parse_err(line, 1, "extension degree must be >= 1"));
            }
            let mut rng = seeded_rng(seed, "ring-modulus");
            make_extension(&base, k, &mut rng)?
        }
    };
    let vars: Vec<&str> = body[open + 1..close]
        .split(',')
        .map(|v| v.trim())
        .filter(|v| !v.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(parse_err(line, 1, "variable list is empty"));
    }
    let ring = PolyRing::new(field.clone(), &vars)?;
    Ok((field, ring))
}

fn offset_parse_error(err: Error, stmt_line: usize) -> Error {
    match err {
        Error::Parse { line, col, msg } => Error::Parse {
            // statement bodies are folded onto one logical line
            line: stmt_line + line - 1,
            col,
            msg,
        },
        other => other,
    }
}

/// Parses the whole document. The seed only matters for extension-field
/// ring declarations, whose modulus it pins.
pub fn parse_input(text: &str, seed: u64) -> Result<InputDoc> {
    let statements = split_statements(text)?;
    let mut ring_data: Option<(FqField, PolyRing)> = None;
    let mut ideal_gens: Option<Vec<Polynomial>> = None;
    let mut matrix: Option<PolyMatrix> = None;

    for stmt in &statements {
        match stmt.keyword {
            "ring" => {
                if ring_data.is_some() {
                    return Err(parse_err(stmt.line, 1, "duplicate ring declaration"));
                }
                ring_data = Some(parse_ring_decl(&stmt.body, stmt.line, seed)?);
            }
            "ideal" => {
                let (_, ring) = ring_data
                    .as_ref()
                    .ok_or_else(|| parse_err(stmt.line, 1, "ideal before ring declaration"))?;
                if ideal_gens.is_some() {
                    return Err(parse_err(stmt.line, 1, "duplicate ideal statement"));
                }
                let body = stmt
                    .body
                    .strip_prefix(':')
                    .ok_or_else(|| parse_err(stmt.line, 1, "expected `ideal:`"))?;
                let gens = body
                    .split(';')
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        parse_polynomial(ring, s).map_err(|e| offset_parse_error(e, stmt.line))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if gens.is_empty() {
                    return Err(parse_err(
                        stmt.line,
                        1,
                        "ideal needs at least one generator",
                    ));
                }
                ideal_gens = Some(gens);
            }
            "matrix" => {
                let (_, ring) = ring_data
                    .as_ref()
                    .ok_or_else(|| parse_err(stmt.line, 1, "matrix before ring declaration"))?;
                if matrix.is_some() {
                    return Err(parse_err(stmt.line, 1, "duplicate matrix statement"));
                }
                let (dims, body) = stmt
                    .body
                    .split_once(':')
                    .ok_or_else(|| parse_err(stmt.line, 1, "expected `matrix <r>x<c>: entries`"))?;
                let (r_txt, c_txt) = dims
                    .trim()
                    .split_once('x')
                    .ok_or_else(|| parse_err(stmt.line, 1, "matrix size must look like 2x3"))?;
                let rows: usize = r_txt.trim().parse().map_err(|_| {
                    parse_err(
                        stmt.line,
                        1,
                        format!("invalid row count `{}`", r_txt.trim()),
                    )
                })?;
                let cols: usize = c_txt.trim().parse().map_err(|_| {
                    parse_err(
                        stmt.line,
                        1,
                        format!("invalid column count `{}`", c_txt.trim()),
                    )
                })?;
                let mut entries = Vec::new();
                for row in body.split(';') {
                    for cell in row.split(',') {
                        let cell = cell.trim();
                        if cell.is_empty() {
                            continue;
                        }
                        entries.push(
                            parse_polynomial(ring, cell)
                                .map_err(|e| offset_parse_error(e, stmt.line))?,
                        );
                    }
                }
                matrix = Some(PolyMatrix::new(ring.clone(), rows, cols, entries)?);
            }
            _ => unreachable!(),
        }
    }

    let (field, ring) =
        ring_data.ok_or_else(|| parse_err(1, 1, "input needs a ring declaration"))?;
    Ok(InputDoc {
        field,
        ring,
        ideal_gens,
        matrix,
    })
}

/// Canonical text form; `parse_input` on the result reproduces the document.
#[allow(dead_code)] // exercised by the canonicalization tests
pub fn print_input(doc: &InputDoc) -> String {
    let mut out = String::new();
    let p = doc.field.characteristic();
    let k = doc.field.degree();
    if k == 1 {
        out.push_str(&format!("ring {p} [{}]\n", doc.ring.var_names().join(",")));
    } else {
        out.push_str(&format!(
            "ring {p}^{k} [{}]\n",
            doc.ring.var_names().join(",")
        ));
    }
    if let Some(gens) = &doc.ideal_gens {
        let txt: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        out.push_str(&format!("ideal: {}\n", txt.join("; ")));
    }
    if let Some(m) = &doc.matrix {
        let mut rows = Vec::new();
        for r in 0..m.rows() {
            let cells: Vec<String> = (0..m.cols()).map(|c| m.at(r, c).to_string()).collect();
            rows.push(cells.join(", "));
        }
        out.push_str(&format!(
            "matrix {}x{}: {}\n",
            m.rows(),
            m.cols(),
            rows.join("; ")
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_paper_input() {
        let doc = parse_input("ring 101 [x,y,z]\nideal: x^3+y^2+1; z^3-x^2-y^2+2\n", 0).unwrap();
        assert_eq!(doc.field.order(), 101);
        assert_eq!(doc.ring.num_vars(), 3);
        assert_eq!(doc.ideal_gens.as_ref().unwrap().len(), 2);
        assert!(doc.matrix.is_none());
    }

    #[test]
    fn non_prime_characteristic() {
        match parse_input("ring 4 [x]\n", 0) {
            Err(Error::NotPrime(4)) => {}
            other => panic!("expected NotPrime, got {other:?}"),
        }
    }

    #[test]
    fn roundtrip_canonicalizes() {
        let text = "# a comment\nring 5 [x,y]\nideal: x^2 + y;\n  x*y-2\nmatrix 2x1: x, y\n";
        let doc = parse_input(text, 3).unwrap();
        let printed = print_input(&doc);
        let doc2 = parse_input(&printed, 3).unwrap();
        assert_eq!(print_input(&doc2), printed);
        assert_eq!(doc2.ideal_gens.unwrap().len(), 2);
        assert_eq!(doc2.matrix.unwrap().rows(), 2);
    }

    #[test]
    fn extension_ring_modulus_is_seeded() {
        let a = parse_input("ring 5^2 [x]\n", 9).unwrap();
        let b = parse_input("ring 5^2 [x]\n", 9).unwrap();
        let c = parse_input("ring 5^2 [x]\n", 10).unwrap();
        assert_eq!(a.field.modulus(), b.field.modulus());
        assert_eq!(a.field.order(), 25);
        assert_eq!(c.field.order(), 25);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_input("ring 101 [x]\nideal: x + w\n", 0) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_input("ideal: x\n", 0).is_err());
        assert!(parse_input("ring 101 [x]\nmatrix 2: x\n", 0).is_err());
    }
}
