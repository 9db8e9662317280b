//! Named complexes used by the tests and the command-line tool.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{whitney_complex, Graph};
use crate::simplex::VertexId;

/// Parameterless keys; `cycle:n`, `path:n`, `complete:n`, `star:n` and
/// `wheel:n` are accepted as well.
pub const FIXED_KEYS: &[&str] = &[
    "point",
    "zerosphere",
    "onesphere",
    "twosphere",
    "threesphere",
    "octahedron",
    "homology3sphere",
    "fig1",
    "figure8",
    "digital8",
    "moebius",
    "cylinder",
];

/// The registry complexes exercised by the property suites.
pub const STANDARD_KEYS: &[&str] = &[
    "cycle:4",
    "cycle:5",
    "path:4",
    "complete:3",
    "complete:4",
    "star:4",
    "wheel:5",
    "octahedron",
    "threesphere",
    "fig1",
    "figure8",
    "digital8",
    "moebius",
    "cylinder",
    "homology3sphere",
];

/// Graph form of a registry entry; `None` for entries that are not Whitney
/// complexes of a graph.
pub fn lookup_graph(key: &str) -> Result<Option<Graph>> {
    let unknown = || Error::UnknownKey(key.to_string());
    if let Some((name, arg)) = key.split_once(':') {
        let n: u32 = arg.parse().map_err(|_| unknown())?;
        let g = match name {
            "cycle" if n >= 3 => Graph::cycle(n),
            "path" if n >= 1 => Graph::path(n),
            "complete" if n >= 1 => Graph::complete(n),
            "star" if n >= 1 => Graph::star(n),
            "wheel" if n >= 3 => Graph::wheel(n),
            _ => return Err(unknown()),
        };
        return Ok(Some(g));
    }
    let g = match key {
        "point" => Graph::edgeless(1),
        "zerosphere" => Graph::edgeless(2),
        "onesphere" => Graph::cycle(4),
        "twosphere" | "octahedron" => octahedron_graph(),
        "threesphere" => Graph::skeleton_of(&lookup("threesphere")?),
        "fig1" => fig1_graph(),
        "figure8" => figure8_graph(),
        "digital8" => digital8_graph(),
        "moebius" => Graph::cycle(7).complement(),
        "cylinder" => cylinder_graph(),
        "homology3sphere" => return Ok(None),
        _ => return Err(unknown()),
    };
    Ok(Some(g))
}

pub fn lookup(key: &str) -> Result<SimplicialComplex> {
    match key {
        "threesphere" => Ok(whitney_complex(&Graph::cycle(4)).double_suspension()),
        "homology3sphere" => Ok(homology_sphere()),
        _ => Ok(whitney_complex(&lookup_graph(key)?.expect("graph-defined entry"))),
    }
}

pub fn standard() -> Vec<(&'static str, SimplicialComplex)> {
    STANDARD_KEYS.iter().map(|&k| (k, lookup(k).expect("standard key"))).collect()
}

/// Suspension of the 4-cycle: antipodal pairs are (1,3), (2,4), (5,6).
pub fn octahedron_graph() -> Graph {
    Graph::skeleton_of(&whitney_complex(&Graph::cycle(4)).suspension())
}

pub fn fig1_graph() -> Graph {
    Graph::from_edges([1, 2, 3, 4, 6, 8, 9, 10], [(1, 2), (2, 3), (3, 1), (3, 4), (3, 6), (3, 8), (8, 9), (8, 10)])
        .unwrap()
}

/// Two 4-cycles sharing vertex 1.
pub fn figure8_graph() -> Graph {
    Graph::from_edges(1..=7, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)]).unwrap()
}

/// Two 4-cycles sharing the edge (1,2).
pub fn digital8_graph() -> Graph {
    Graph::from_edges(1..=6, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 2)]).unwrap()
}

pub fn cylinder_graph() -> Graph {
    Graph::from_edges(
        1..=8,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 5),
            (1, 5),
            (5, 2),
            (2, 6),
            (6, 3),
            (3, 7),
            (7, 4),
            (4, 8),
            (8, 1),
        ],
    )
    .unwrap()
}

pub fn homology_sphere() -> SimplicialComplex {
    SimplicialComplex::from_facets(HOMOLOGY_SPHERE_FACETS.iter().map(|f| f.iter().copied())).expect("static facet data")
}

/// Facets of a 16-vertex triangulated homology 3-sphere.
const HOMOLOGY_SPHERE_FACETS: [[VertexId; 4]; 90] = [
    [1, 2, 4, 9],
    [1, 2, 4, 15],
    [1, 2, 6, 14],
    [1, 2, 6, 15],
    [1, 2, 9, 14],
    [1, 3, 4, 12],
    [1, 3, 4, 15],
    [1, 3, 7, 10],
    [1, 3, 7, 12],
    [1, 3, 10, 15],
    [1, 4, 9, 12],
    [1, 5, 6, 13],
    [1, 5, 6, 14],
    [1, 5, 8, 11],
    [1, 5, 8, 13],
    [1, 5, 11, 14],
    [1, 6, 13, 15],
    [1, 7, 8, 10],
    [1, 7, 8, 11],
    [1, 7, 11, 12],
    [1, 8, 10, 13],
    [1, 9, 11, 12],
    [1, 9, 11, 14],
    [1, 10, 13, 15],
    [2, 3, 5, 10],
    [2, 3, 5, 11],
    [2, 3, 7, 10],
    [2, 3, 7, 13],
    [2, 3, 11, 13],
    [2, 4, 9, 13],
    [2, 4, 11, 13],
    [2, 4, 11, 15],
    [2, 5, 8, 11],
    [2, 5, 8, 12],
    [2, 5, 10, 12],
    [2, 6, 10, 12],
    [2, 6, 10, 14],
    [2, 6, 12, 15],
    [2, 7, 9, 13],
    [2, 7, 9, 14],
    [2, 7, 10, 14],
    [2, 8, 11, 15],
    [2, 8, 12, 15],
    [3, 4, 5, 14],
    [3, 4, 5, 15],
    [3, 4, 12, 14],
    [3, 5, 10, 15],
    [3, 5, 11, 14],
    [3, 7, 12, 13],
    [3, 11, 13, 14],
    [3, 12, 13, 14],
    [4, 5, 6, 7],
    [4, 5, 6, 14],
    [4, 5, 7, 15],
    [4, 6, 7, 11],
    [4, 6, 10, 11],
    [4, 6, 10, 14],
    [4, 7, 11, 15],
    [4, 8, 9, 12],
    [4, 8, 9, 13],
    [4, 8, 10, 13],
    [4, 8, 10, 14],
    [4, 8, 12, 14],
    [4, 10, 11, 13],
    [5, 6, 7, 13],
    [5, 7, 9, 13],
    [5, 7, 9, 15],
    [5, 8, 9, 12],
    [5, 8, 9, 13],
    [5, 9, 10, 12],
    [5, 9, 10, 15],
    [6, 7, 11, 12],
    [6, 7, 12, 13],
    [6, 10, 11, 12],
    [6, 12, 13, 15],
    [7, 8, 10, 14],
    [7, 8, 11, 15],
    [7, 8, 14, 15],
    [7, 9, 14, 15],
    [8, 12, 14, 15],
    [9, 10, 11, 12],
    [9, 10, 11, 16],
    [9, 10, 15, 16],
    [9, 11, 14, 16],
    [9, 14, 15, 16],
    [10, 11, 13, 16],
    [10, 13, 15, 16],
    [11, 13, 14, 16],
    [12, 13, 14, 15],
    [13, 14, 15, 16],
];
