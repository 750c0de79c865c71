//! The line-oriented diagram file format.
//!
//! ```text
//! # comment
//! link trefoil
//! x + 1>2 4>5
//! x + 3>4 6>1
//! x + 5>6 2>3
//! ```
//!
//! `link <name>` names the diagram, `loops <k>` adds `k` crossingless
//! circles, and each `x` line is one crossing: sign `+`, `-` or `*`
//! (singular), then strand `a` as `in>out`, then strand `b`. On classical
//! crossings strand `a` is the understrand; on singular crossings promoting
//! strand `b` to the overstrand gives the positive resolution.

use super::{ArcId, Crossing, CrossingKind, Diagram, DiagramError};

/// A diagram together with the name from its `link` header.
#[derive(Debug, Clone)]
pub struct NamedDiagram {
    pub name: String,
    pub diagram: Diagram,
}

pub fn parse_diagram(text: &str) -> Result<NamedDiagram, DiagramError> {
    let mut name = None;
    let mut free_loops = 0u32;
    let mut crossings = vec![];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let err = |msg: &str| DiagramError::Parse {
            line: lineno,
            msg: msg.to_string(),
        };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("link") => {
                name = Some(words.collect::<Vec<_>>().join(" "));
            }
            Some("loops") => {
                let k = words
                    .next()
                    .ok_or_else(|| err("missing loop count"))?
                    .parse::<u32>()
                    .map_err(|_| err("loop count is not a nonnegative integer"))?;
                free_loops += k;
            }
            Some("x") => {
                let kind = match words.next() {
                    Some("+") => CrossingKind::Positive,
                    Some("-") => CrossingKind::Negative,
                    Some("*") => CrossingKind::Singular,
                    _ => return Err(err("crossing sign must be +, - or *")),
                };
                let (a_in, a_out) = parse_strand(words.next(), lineno)?;
                let (b_in, b_out) = parse_strand(words.next(), lineno)?;
                if words.next().is_some() {
                    return Err(err("trailing tokens after crossing"));
                }
                crossings.push(Crossing {
                    kind,
                    a_in,
                    a_out,
                    b_in,
                    b_out,
                });
            }
            Some(other) => return Err(err(&format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    let diagram = Diagram::new(crossings, free_loops)?;
    Ok(NamedDiagram {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        diagram,
    })
}

fn parse_strand(word: Option<&str>, line: usize) -> Result<(ArcId, ArcId), DiagramError> {
    let err = |msg: &str| DiagramError::Parse {
        line,
        msg: msg.to_string(),
    };
    let w = word.ok_or_else(|| err("missing strand"))?;
    let (i, o) = w
        .split_once('>')
        .ok_or_else(|| err("strand must look like in>out"))?;
    let parse = |s: &str| {
        s.parse::<ArcId>()
            .ok()
            .filter(|&a| a > 0)
            .ok_or_else(|| err("arc identifiers are positive integers"))
    };
    Ok((parse(i)?, parse(o)?))
}

/// Render a diagram back into the file format.
pub fn render_diagram(name: &str, d: &Diagram) -> String {
    let mut out = format!("link {name}\n");
    if d.free_loops() > 0 {
        out.push_str(&format!("loops {}\n", d.free_loops()));
    }
    for c in d.crossings() {
        let sign = match c.kind {
            CrossingKind::Positive => '+',
            CrossingKind::Negative => '-',
            CrossingKind::Singular => '*',
        };
        out.push_str(&format!(
            "x {sign} {}>{} {}>{}\n",
            c.a_in, c.a_out, c.b_in, c.b_out
        ));
    }
    out
}
