//! JSON file formats.
//!
//! Complexes: `{"facets": [[1,2,3], ...]}`, closed under subsets on load.
//! Graphs: `{"vertices": [...], "edges": [[a,b], ...]}`.
//! Vertex maps: `{"map": [[from, to], ...]}`.
//! Empty or whitespace-only input reads as the empty complex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{whitney_complex, Graph};
use crate::simplex::{Simplex, VertexId};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetFile {
    facets: Vec<Vec<VertexId>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    map: Vec<(VertexId, VertexId)>,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    if text.trim().is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    let file: FacetFile = serde_json::from_str(text).map_err(parse_err)?;
    SimplicialComplex::from_facets(file.facets).map_err(|e| parse_err(format!("bad facet: {e}")))
}

/// Maximal simplices in canonical order, one line per facet.
pub fn complex_to_json(g: &SimplicialComplex) -> String {
    let facets: Vec<String> = g.facets().iter().map(|f| serde_json::to_string(f.vertices()).unwrap()).collect();
    if facets.is_empty() {
        return "{\"facets\": []}\n".to_string();
    }
    format!("{{\"facets\": [\n  {}\n]}}\n", facets.join(",\n  "))
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).map_err(parse_err)?;
    Graph::from_edges(file.vertices, file.edges)
}

pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile { vertices: g.vertices().collect(), edges: g.edges() };
    serde_json::to_string(&file).unwrap() + "\n"
}

/// Reads either format; graphs become their Whitney complexes.
pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    if text.trim().is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
    if value.get("edges").is_some() {
        Ok(whitney_complex(&graph_from_json(text)?))
    } else {
        complex_from_json(text)
    }
}

pub fn vertex_map_from_json(text: &str) -> Result<BTreeMap<VertexId, VertexId>> {
    let file: MapFile = serde_json::from_str(text).map_err(parse_err)?;
    let mut out = BTreeMap::new();
    for (a, b) in file.map {
        if out.insert(a, b).is_some() {
            return Err(parse_err(format!("vertex {a} mapped twice")));
        }
    }
    Ok(out)
}

pub fn vertex_map_to_json(m: &BTreeMap<VertexId, VertexId>) -> String {
    let file = MapFile { map: m.iter().map(|(&a, &b)| (a, b)).collect() };
    serde_json::to_string(&file).unwrap() + "\n"
}

/// Facets as simplices, for callers that want to inspect a file without
/// taking the closure.
pub fn facets_from_json(text: &str) -> Result<Vec<Simplex>> {
    let file: FacetFile = serde_json::from_str(text).map_err(parse_err)?;
    file.facets.into_iter().map(|f| Simplex::new(f).map_err(parse_err)).collect()
}
