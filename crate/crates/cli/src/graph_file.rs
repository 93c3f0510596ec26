//! Plain-text Yashima/Tron positions.
//!
//! ```text
//! # comment
//! variant yashima        (or tron; defaults to yashima)
//! vertices 3
//! L 0
//! R 2
//! e 0 1
//! e 1 2
//! e 1 2                  (repeated lines add parallel edges)
//! ```

use std::fmt::Write;

use cgt_diamond_core::{MultiGraph, Player, Variant, YashimaState};

use crate::error::CliError;

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column: 1,
        message: message.into(),
    }
}

fn invalid(line: usize, message: impl Into<String>) -> CliError {
    CliError::InvalidState {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<YashimaState, CliError> {
    let mut variant = None;
    let mut vertices: Option<(usize, usize)> = None;
    let mut left: Option<(usize, usize)> = None;
    let mut right: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(line, format!("expected a vertex number, found '{s}'")))
        };
        match fields.as_slice() {
            ["variant", v] => {
                if variant.is_some() {
                    return Err(parse_error(line, "duplicate variant line"));
                }
                variant = Some(match *v {
                    "yashima" => Variant::Yashima,
                    "tron" => Variant::Tron,
                    other => return Err(parse_error(line, format!("unknown variant '{other}'"))),
                });
            }
            ["vertices", n] => {
                if vertices.is_some() {
                    return Err(parse_error(line, "duplicate vertices line"));
                }
                vertices = Some((number(n)?, line));
            }
            ["L", v] => {
                if left.is_some() {
                    return Err(parse_error(line, "duplicate L line"));
                }
                left = Some((number(v)?, line));
            }
            ["R", v] => {
                if right.is_some() {
                    return Err(parse_error(line, "duplicate R line"));
                }
                right = Some((number(v)?, line));
            }
            ["e", u, v] => {
                let (u, v) = (number(u)?, number(v)?);
                if u == v {
                    return Err(parse_error(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v, line));
            }
            _ => return Err(parse_error(line, format!("unrecognized line '{content}'"))),
        }
    }

    let last = text.lines().count().max(1);
    let (n, _) = vertices.ok_or_else(|| parse_error(last, "missing vertices line"))?;
    let (l, l_line) = left.ok_or_else(|| parse_error(last, "missing L line"))?;
    let (r, r_line) = right.ok_or_else(|| parse_error(last, "missing R line"))?;
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(invalid(line, format!("edge {u}-{v} leaves the {n} vertices")));
        }
    }
    if l >= n {
        return Err(invalid(l_line, format!("L on vertex {l} of {n}")));
    }
    if r >= n {
        return Err(invalid(r_line, format!("R on vertex {r} of {n}")));
    }
    if l == r {
        return Err(invalid(r_line, "L and R share a vertex"));
    }
    let graph = MultiGraph::new(n, edges.iter().map(|&(u, v, _)| (u, v)))?;
    Ok(YashimaState::new(graph, l, r, variant.unwrap_or(Variant::Yashima))?)
}

pub fn print_graph(state: &YashimaState) -> String {
    let mut out = String::new();
    let variant = match state.variant() {
        Variant::Yashima => "yashima",
        Variant::Tron => "tron",
    };
    let g = state.graph();
    let _ = writeln!(out, "variant {variant}");
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    let _ = writeln!(out, "L {}", state.token(Player::Left));
    let _ = writeln!(out, "R {}", state.token(Player::Right));
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
