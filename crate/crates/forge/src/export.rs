//! Edge-colored complete graphs as Graphviz DOT or JSON.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use ramsey_forge_core::coloring::{Edge, EdgeColoring};
use ramsey_forge_core::CyclotomicPartition;

/// DOT colors by class index. Past the end the list repeats, so class `i`
/// is drawn in `PALETTE[i % PALETTE.len()]`.
pub const PALETTE: [&str; 10] =
    ["red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(format!("unknown export format `{other}` (expected dot or json)")),
        }
    }
}

pub fn palette_color(class: usize) -> &'static str {
    PALETTE[class % PALETTE.len()]
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    #[serde(rename = "N")]
    n: u64,
    m: usize,
    x: u64,
    edges: &'a [Edge],
}

/// Writes every edge of `K_N` with its color.
pub fn export_coloring<W: Write>(p: &CyclotomicPartition, format: ExportFormat, mut out: W) -> anyhow::Result<()> {
    let coloring = EdgeColoring::from_partition(p)
        .ok_or_else(|| anyhow::anyhow!("partition classes are not symmetric; the coloring is undefined"))?;
    match format {
        ExportFormat::Json => {
            let edges: Vec<Edge> = coloring.edges().collect();
            let doc = JsonDoc { n: p.modulus(), m: p.colors(), x: p.generator(), edges: &edges };
            serde_json::to_writer(&mut out, &doc)?;
            writeln!(out)?;
        }
        ExportFormat::Dot => {
            writeln!(out, "graph K{} {{", p.modulus())?;
            writeln!(out, "  // m={} N={} x={}", p.colors(), p.modulus(), p.generator())?;
            writeln!(out, "  layout=circo;")?;
            writeln!(out, "  node [shape=circle];")?;
            for v in 0..p.modulus() {
                writeln!(out, "  {v};")?;
            }
            for e in coloring.edges() {
                writeln!(out, "  {} -- {} [color={}, class={}];", e.u, e.v, palette_color(e.color), e.color)?;
            }
            writeln!(out, "}}")?;
        }
    }
    out.flush()?;
    Ok(())
}
