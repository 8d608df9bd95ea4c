//! The ideal file format.
//!
//! ```text
//! # comment
//! vars: x, y, z, t
//! order: drl          # or lex
//! field: q            # or gf <prime>
//! y*z^3 - x^2*t^2
//! x*z^2 - y^2*t
//! ```
//!
//! Headers come first, each at most once; `vars` is required, `order`
//! defaults to `drl` and `field` to `q`. Every further non-blank line is
//! one generator.

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::monomial::{MonomialOrder, OrderKind};
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorLine {
    pub text: String,
    /// 1-based line number in the file.
    pub line: usize,
    /// Characters preceding `text` on its line.
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub vars: Vec<String>,
    pub order: OrderKind,
    pub field: FieldSpec,
    pub generators: Vec<GeneratorLine>,
}

impl IdealSpec {
    pub fn ring<F: Field>(&self, field: F) -> Result<PolyRing<F>> {
        PolyRing::new(
            field,
            MonomialOrder::new(self.order, self.vars.len()),
            self.vars.clone(),
        )
    }

    /// Parses the generators in `ring`. Errors carry file positions.
    pub fn generators_in<F: Field>(&self, ring: &PolyRing<F>) -> Result<Vec<Polynomial<F::Elem>>> {
        self.generators
            .iter()
            .map(|g| {
                let p = ring.parse_line(&g.text, g.line, g.offset)?;
                if p.is_zero() {
                    return Err(Error::parse(g.line, g.offset + 1, "generator is zero"));
                }
                Ok(p)
            })
            .collect()
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(char::is_alphabetic) && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses and validates an ideal file.
pub fn parse_ideal(text: &str) -> Result<IdealSpec> {
    let mut vars: Option<Vec<String>> = None;
    let mut order: Option<OrderKind> = None;
    let mut field: Option<FieldSpec> = None;
    let mut generators = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = strip_comment(raw);
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let offset = content.chars().take_while(|c| c.is_whitespace()).count();
        let Some(colon) = content.find(':') else {
            generators.push(GeneratorLine {
                text: trimmed.to_string(),
                line,
                offset,
            });
            continue;
        };
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        let value_col = content[..colon + 1].chars().count() + 1;
        if !generators.is_empty() {
            return Err(Error::parse(
                line,
                offset + 1,
                "header after the first generator",
            ));
        }
        match key {
            "vars" => {
                if vars.is_some() {
                    return Err(Error::parse(line, offset + 1, "duplicate `vars` header"));
                }
                let names: Vec<String> = value
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                if names.is_empty() {
                    return Err(Error::parse(line, value_col, "no variables"));
                }
                for (i, name) in names.iter().enumerate() {
                    if !is_identifier(name) {
                        return Err(Error::parse(
                            line,
                            value_col,
                            format!("invalid variable name `{name}`"),
                        ));
                    }
                    if names[..i].contains(name) {
                        return Err(Error::parse(
                            line,
                            value_col,
                            format!("variable `{name}` repeated"),
                        ));
                    }
                }
                vars = Some(names);
            }
            "order" => {
                if order.is_some() {
                    return Err(Error::parse(line, offset + 1, "duplicate `order` header"));
                }
                order = Some(match value.trim() {
                    "drl" | "degrevlex" => OrderKind::DegRevLex,
                    "lex" => OrderKind::Lex,
                    other => {
                        return Err(Error::parse(
                            line,
                            value_col,
                            format!("unknown order `{other}`"),
                        ))
                    }
                });
            }
            "field" => {
                if field.is_some() {
                    return Err(Error::parse(line, offset + 1, "duplicate `field` header"));
                }
                let words: Vec<&str> = value.split_whitespace().collect();
                field = Some(match words.as_slice() {
                    ["q"] | ["Q"] => FieldSpec::Rationals,
                    ["gf", p] => {
                        let p: u32 = p.parse().map_err(|_| {
                            Error::parse(line, value_col, format!("invalid modulus `{p}`"))
                        })?;
                        PrimeField::new(p)
                            .map_err(|e| Error::parse(line, value_col, e.to_string()))?;
                        FieldSpec::Prime(p)
                    }
                    _ => {
                        return Err(Error::parse(
                            line,
                            value_col,
                            format!("unknown field `{}`", value.trim()),
                        ))
                    }
                });
            }
            other => {
                return Err(Error::parse(
                    line,
                    offset + 1,
                    format!("unknown header `{other}`"),
                ));
            }
        }
    }

    let vars = vars.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing `vars` header"))?;
    if generators.is_empty() {
        return Err(Error::parse(last_line.max(1), 1, "no generators"));
    }
    let spec = IdealSpec {
        vars,
        order: order.unwrap_or(OrderKind::DegRevLex),
        field: field.unwrap_or(FieldSpec::Rationals),
        generators,
    };
    match spec.field {
        FieldSpec::Rationals => {
            spec.generators_in(&spec.ring(Rationals)?)?;
        }
        FieldSpec::Prime(p) => {
            spec.generators_in(&spec.ring(PrimeField::new(p)?)?)?;
        }
    }
    Ok(spec)
}
