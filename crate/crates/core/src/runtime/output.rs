//! Output writers: per-step CSV scalars and deterministic plain-text
//! grid dumps.

use super::mesh::Mesh;
use super::step::StepStats;
use crate::basis::BasisTables;
use crate::spec::OutputFormat;
use std::fmt::Write as _;
use std::path::Path;

pub fn csv_header(n_var: usize) -> String {
    let mut s = String::from("step,t,dt");
    for v in 0..n_var {
        write!(s, ",sum_q{v}").unwrap();
    }
    s.push_str(",troubled\n");
    s
}

pub fn csv_row(step: usize, t: f64, stats: &StepStats) -> String {
    let mut s = format!("{step},{t:?},{:?}", stats.dt);
    for v in &stats.sums {
        write!(s, ",{v:?}").unwrap();
    }
    writeln!(s, ",{}", stats.troubled).unwrap();
    s
}

/// Plain-text nodal dump: header (t, N, d, q, cells_per_dim), then one
/// row per (cell, node, var) in lexicographic order.
pub fn grid_dump(mesh: &Mesh, tables: &BasisTables) -> String {
    let cfg = &mesh.cfg;
    let cells: Vec<String> = mesh.cells_per_dim.iter().map(|c| c.to_string()).collect();
    let mut s = format!(
        "t={:?} N={} d={} q={} cells={}\n",
        mesh.time,
        tables.order,
        cfg.dim,
        cfg.n_var,
        cells.join("x")
    );
    for (c, cell) in mesh.cells.iter().enumerate() {
        for p in 0..cfg.npts() {
            for v in 0..cfg.n_var {
                writeln!(s, "{c} {p} {v} {:?}", cell.dofs[p * cfg.q_pad + v]).unwrap();
            }
        }
    }
    s
}

/// Write the mesh state in the requested format.
pub fn write_output(
    mesh: &Mesh,
    tables: &BasisTables,
    format: OutputFormat,
    csv_log: &str,
    path: &Path,
) -> std::io::Result<()> {
    let text = match format {
        OutputFormat::Csv => csv_log.to_string(),
        OutputFormat::GridDump => grid_dump(mesh, tables),
    };
    std::fs::write(path, text)
}
