use std::fmt;
use std::path::Path;

use ginbetti::exactla::FieldSpec;
use ginbetti::groebner::GradedIdeal;
use ginbetti::ring::{ParseError, RingCtx, TermOrder};
use ginbetti::Error;

/// A located problem with an ideal file.
#[derive(Debug)]
pub struct InputError {
    pub file: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.file)?;
        if let Some(l) = self.line {
            write!(f, ":{l}")?;
            if let Some(c) = self.column {
                write!(f, ":{c}")?;
            }
        }
        write!(f, ": {}", self.message)
    }
}

/// Contents of an ideal file.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub path: String,
    pub ctx: RingCtx,
    pub order: TermOrder,
    pub gens: Vec<String>,
    pub ideal: GradedIdeal,
}

/// Ring header options applied on top of the file.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub field: Option<FieldSpec>,
    pub degree_guard: Option<u32>,
}

struct Header {
    n: usize,
    field: FieldSpec,
    names: Option<Vec<String>>,
}

fn parse_ring(
    rest: &str,
    err: &dyn Fn(Option<usize>, String) -> InputError,
) -> Result<Header, InputError> {
    let (mut n, mut field, mut names) = (None, FieldSpec::rationals(), None);
    for item in rest.split_whitespace() {
        let Some((key, value)) = item.split_once('=') else {
            return Err(err(
                None,
                format!("expected key=value in ring header, got {item:?}"),
            ));
        };
        match key {
            "n" => {
                n = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| err(None, format!("bad variable count {value:?}")))?,
                )
            }
            "field" => field = value.parse().map_err(|e: Error| err(None, e.to_string()))?,
            "vars" => names = Some(value.split(',').map(str::to_string).collect()),
            other => return Err(err(None, format!("unknown ring option {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| err(None, "ring header needs n=<int>".into()))?;
    Ok(Header { n, field, names })
}

fn parse_message(pe: &ParseError) -> String {
    let shown = pe.to_string();
    match shown.split_once(": ") {
        Some((_, rest)) => rest.to_string(),
        None => shown,
    }
}

/// Parses the line format
///
/// ```text
/// ring: n=3 field=Q
/// order: degrevlex
/// gens:
/// x1^2
/// x2^2 - x1*x3   # comment
/// ```
pub fn parse_ideal_file(path: &str, text: &str, over: Overrides) -> Result<IdealFile, InputError> {
    let err_at = |line: Option<usize>, column: Option<usize>, message: String| InputError {
        file: path.to_string(),
        line,
        column,
        message,
    };
    let mut header: Option<Header> = None;
    let mut order = TermOrder::DegRevLex;
    let mut in_gens = false;
    // (line number, column offset of the text, text)
    let mut raw: Vec<(usize, usize, String)> = Vec::new();
    for (k, full) in text.lines().enumerate() {
        let lineno = k + 1;
        let body = full.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let err = |c: Option<usize>, m: String| err_at(Some(lineno), c, m);
        if !in_gens {
            if let Some(rest) = trimmed.strip_prefix("ring:") {
                header = Some(parse_ring(rest, &err)?);
            } else if let Some(rest) = trimmed.strip_prefix("order:") {
                order = rest.parse().map_err(|e: Error| err(None, e.to_string()))?;
            } else if let Some(rest) = trimmed.strip_prefix("gens:") {
                in_gens = true;
                if !rest.trim().is_empty() {
                    return Err(err(
                        None,
                        "generators start on the line after `gens:`".into(),
                    ));
                }
            } else {
                return Err(err(
                    Some(1),
                    format!("expected ring:, order: or gens:, got {trimmed:?}"),
                ));
            }
            continue;
        }
        let lead = body.len() - body.trim_start().len();
        let gen = trimmed.trim_end_matches(',').trim_end();
        raw.push((lineno, lead, gen.to_string()));
    }
    let h = header.ok_or_else(|| err_at(None, None, "missing `ring:` header".into()))?;
    let field = over.field.unwrap_or(h.field);
    let mut ctx = RingCtx::new(h.n, field).map_err(|e| err_at(None, None, e.to_string()))?;
    if let Some(names) = h.names {
        ctx = ctx
            .with_names(names)
            .map_err(|e| err_at(None, None, e.to_string()))?;
    }
    if let Some(g) = over.degree_guard {
        ctx = ctx.with_degree_guard(g);
    }
    let mut polys = Vec::with_capacity(raw.len());
    for (lineno, lead, gen) in &raw {
        let f = ctx.parse(TermOrder::DegRevLex, gen).map_err(|e| match e {
            Error::Parse(pe) => err_at(
                Some(*lineno),
                Some(lead + pe.position + 1),
                parse_message(&pe),
            ),
            other => err_at(Some(*lineno), None, other.to_string()),
        })?;
        polys.push(f);
    }
    let ideal = GradedIdeal::new(ctx.clone(), polys).map_err(|e| match e {
        Error::NotHomogeneous { index } => err_at(
            Some(raw[index].0),
            None,
            format!("generator {:?} is not homogeneous", raw[index].2),
        ),
        other => err_at(None, None, other.to_string()),
    })?;
    Ok(IdealFile {
        path: path.to_string(),
        ctx,
        order,
        gens: raw.into_iter().map(|r| r.2).collect(),
        ideal,
    })
}

pub fn read_ideal_file(path: &Path, over: Overrides) -> Result<IdealFile, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError {
        file: shown.clone(),
        line: None,
        column: None,
        message: e.to_string(),
    })?;
    parse_ideal_file(&shown, &text, over)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_and_generators() {
        let text =
            "# example\nring: n=3 field=Fp:101\norder: lex\ngens:\n  x1^2,\n x2*x3 - x1^2 # tail\n";
        let f = parse_ideal_file("t", text, Overrides::default()).unwrap();
        assert_eq!(f.ctx.n(), 3);
        assert_eq!(f.ctx.field().to_string(), "Fp:101");
        assert_eq!(f.order, TermOrder::Lex);
        assert_eq!(f.gens, vec!["x1^2", "x2*x3 - x1^2"]);
    }

    #[test]
    fn reports_line_and_column() {
        let text = "ring: n=2\ngens:\nx1^2\n   x1*x3\n";
        let e = parse_ideal_file("t", text, Overrides::default()).unwrap_err();
        assert_eq!((e.line, e.column), (Some(4), Some(7)));
        let e = parse_ideal_file("t", "ring: n=2\ngens:\nx1 + x2^2\n", Overrides::default())
            .unwrap_err();
        assert_eq!(e.line, Some(3));
    }

    #[test]
    fn names_and_overrides() {
        let text = "ring: n=2 vars=a,b\ngens:\na*b\n";
        let over = Overrides {
            field: Some(FieldSpec::prime(7).unwrap()),
            degree_guard: Some(9),
        };
        let f = parse_ideal_file("t", text, over).unwrap();
        assert_eq!(f.ctx.field().to_string(), "Fp:7");
        assert_eq!(f.ctx.degree_guard(), 9);
        assert_eq!(f.ideal.fmt_gens(), vec!["a*b"]);
    }
}
