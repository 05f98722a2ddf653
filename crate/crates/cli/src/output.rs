use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use cswigner::{GridSpec64, GridValues64, Kind, Method, PhasePoint64};

/// Parameters echoed into every output document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub kind: Kind,
    pub n: usize,
    pub l: usize,
    pub alpha: f64,
    pub omega_bar: f64,
    /// Fixed centre-of-mass point for `total` grids.
    pub cm_point: Option<PhasePoint64>,
    pub preset: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub max_imag_residue: f64,
    pub max_quad_error: f64,
    pub convention_dependent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDoc {
    pub params: ParamsEcho,
    pub grid: GridSpec64,
    pub method: Method,
    /// `n_p` rows of `n_q` values.
    pub values: Vec<Vec<f64>>,
    pub diagnostics: Diagnostics,
    pub version: String,
}

impl OutputDoc {
    pub fn new(params: ParamsEcho, method: Method, grid: &GridValues64) -> Self {
        Self {
            params,
            grid: grid.grid,
            method,
            values: grid.values_matrix(),
            diagnostics: Diagnostics {
                max_imag_residue: grid.max_imag_residue(),
                max_quad_error: grid.max_quad_error(),
                convention_dependent: grid.convention_dependent(),
            },
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// `q,p,w` rows, `p` outer and `q` inner. `Display` for `f64` prints the shortest string
/// that parses back to the same value.
pub fn write_csv<W: Write>(mut w: W, grid: &GridValues64) -> io::Result<()> {
    writeln!(w, "q,p,w")?;
    let g = &grid.grid;
    for ip in 0..g.n_p {
        let p = g.p(ip);
        for iq in 0..g.n_q {
            writeln!(w, "{},{},{}", g.q(iq), p, grid.value(ip, iq))?;
        }
    }
    w.flush()
}

pub fn write_json<W: Write>(mut w: W, doc: &OutputDoc) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, doc)?;
    writeln!(w)?;
    w.flush()
}
