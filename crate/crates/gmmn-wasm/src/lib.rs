//! Browser bindings for a few gmmn computations. The exported functions return SVG or JSON
//! strings; the plain `*_impl` functions hold the logic so they can be tested natively.

use gmmn::center::center_modular_from;
use gmmn::exactnum::embed::embed_digits;
use gmmn::exactnum::CycQ;
use gmmn::fusion::SlnModular;
use gmmn::graphs::{self, NGraph};
use gmmn::koornwinder::{hypocycloid_svg, KVariety};
use num_complex::Complex64;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Browser-side limits, smaller than the command line's.
const MAX_RANK: usize = 5;
const MAX_ORDER: u32 = 12;

fn check(rank: usize, level: u32) -> Result<(), String> {
    if !(2..=MAX_RANK).contains(&rank) || rank as u32 + level > MAX_ORDER {
        return Err(format!("choose 2 <= N <= {MAX_RANK} and N + e <= {MAX_ORDER}"));
    }
    Ok(())
}

fn cyc_text(x: &CycQ, digits: u32) -> String {
    let (re, im) = embed_digits(x, digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

pub fn koornwinder_svg_impl(rank: usize, level: u32) -> Result<String, String> {
    check(rank, level)?;
    let v = KVariety::new(rank, level).map_err(|e| e.to_string())?;
    Ok(hypocycloid_svg(rank, Some(&v.first_coordinate_clusters())))
}

#[derive(Serialize)]
pub struct CenterView {
    pub labels: Vec<String>,
    pub s: Vec<Vec<String>>,
    pub t: Vec<String>,
    pub exact_t: Vec<String>,
    pub warning: Option<String>,
}

pub fn center_matrices_impl(rank: usize, level: u32, digits: u32, unitary: bool) -> Result<CenterView, String> {
    check(rank, level)?;
    let md = SlnModular::new(rank, level);
    let (data, warning) = match center_modular_from(&md) {
        Ok(d) => (d, None),
        Err(e) => {
            let msg = e.to_string();
            let gmmn::center::CenterError::Unsupported { partial, .. } = e;
            (*partial, Some(msg))
        }
    };
    let data = if unitary { data.to_unitary(&md) } else { data };
    let missing: std::collections::BTreeSet<(usize, usize)> = data.missing.iter().copied().collect();
    let labels = data
        .simples
        .iter()
        .map(|x| {
            if x.is_split() {
                format!("{}|{}#{}", x.m, x.k, x.split)
            } else {
                format!("{}|{}", x.m, x.k)
            }
        })
        .collect();
    let s = data
        .s
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if missing.contains(&(i, j)) { "?".to_string() } else { cyc_text(x, digits) })
                .collect()
        })
        .collect();
    Ok(CenterView {
        labels,
        s,
        t: data.t.iter().map(|x| cyc_text(x, digits)).collect(),
        exact_t: data.t.iter().map(|x| x.to_string()).collect(),
        warning,
    })
}

#[derive(Serialize)]
pub struct SpectrumView {
    pub vertices: usize,
    pub passes: bool,
    pub summary: String,
    pub svg: String,
}

fn load(source: &str) -> Result<NGraph, String> {
    match graphs::builtin(source.trim()) {
        Some(g) => Ok(g),
        None => NGraph::parse(source).map_err(|e| e.to_string()),
    }
}

/// `source` is a shipped graph name or the text of a graph file.
pub fn graph_spectrum_impl(source: &str, level: Option<u32>) -> Result<SpectrumView, String> {
    let g = load(source)?;
    let level = level.or(g.level).ok_or("the graph has no level; enter one")?;
    check(g.rank, level)?;
    let r = graphs::verify(&g, level);
    let (summary, overlay) = match &r.spectrum {
        Some(sp) => (
            sp.describe(),
            sp.first_coordinate
                .iter()
                .map(|(z, m)| (Complex64::new(z[0], z[1]), *m))
                .collect::<Vec<_>>(),
        ),
        None => ("no spectrum: verification failed".to_string(), Vec::new()),
    };
    Ok(SpectrumView {
        vertices: g.len(),
        passes: r.passes(),
        summary,
        svg: hypocycloid_svg(g.rank, Some(&overlay)),
    })
}

fn to_json<T: Serialize>(x: Result<T, String>) -> Result<String, JsError> {
    x.map_err(|e| JsError::new(&e))
        .and_then(|v| serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string())))
}

#[wasm_bindgen]
pub fn koornwinder_svg(rank: usize, level: u32) -> Result<String, JsError> {
    koornwinder_svg_impl(rank, level).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn center_matrices(rank: usize, level: u32, digits: u32, unitary: bool) -> Result<String, JsError> {
    to_json(center_matrices_impl(rank, level, digits, unitary))
}

#[wasm_bindgen]
pub fn graph_spectrum(source: &str, level: Option<u32>) -> Result<String, JsError> {
    to_json(graph_spectrum_impl(source, level))
}

#[wasm_bindgen]
pub fn builtin_graphs() -> Vec<String> {
    graphs::BUILTIN_NAMES.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_has_points() {
        let svg = koornwinder_svg_impl(3, 3).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.matches("<circle").count() >= 4);
        assert!(koornwinder_svg_impl(7, 1).is_err());
    }

    #[test]
    fn center_view() {
        let v = center_matrices_impl(3, 3, 6, false).unwrap();
        assert_eq!(v.labels.len(), 14);
        assert_eq!(v.s.len(), 14);
        assert!(v.warning.is_none());
        assert!(v.s.iter().flatten().any(|x| x == "9.000000+0.000000i"));
        let v = center_matrices_impl(4, 2, 6, false).unwrap();
        assert!(v.warning.is_some());
        assert!(v.s.iter().flatten().any(|x| x == "?"));
    }

    #[test]
    fn spectra() {
        let v = graph_spectrum_impl("E4", None).unwrap();
        assert!(v.passes);
        assert_eq!(v.vertices, 12);
        assert!(v.summary.contains("multiplicity 4"), "{}", v.summary);
        let text = graphs::gen_type_a(3, 2).to_text();
        let v = graph_spectrum_impl(&text, None).unwrap();
        assert!(v.passes);
        assert!(graph_spectrum_impl("not a graph", Some(2)).is_err());
    }
}
