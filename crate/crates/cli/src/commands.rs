use std::path::Path;

use serde_json::{json, Value};
use startop::characteristics::{fermi_characteristic, wu_characteristic};
use startop::dynamics::{fixed_point_index_sum, fixed_simplices, lefschetz_number, SimplexMap};
use startop::energy::{connection_matrix, green_matrix, Region};
use startop::graph::{barycentric_refine, edge_refine, whitney_complex, Graph};
use startop::hodge::{betti as betti_numbers, exterior_derivative, hodge_laplacian};
use startop::homeo::{homeomorphic, Certificate, HomeoVerdict, Outcome as Verdict, Witness, WitnessKind};
use startop::linalg::IntMatrix;
use startop::random::{random_graph_with_edges, rng};
use startop::recognition::{
    is_ball, is_contractible, is_dehn_sommerville, is_manifold, is_manifold_with_boundary, is_sphere,
};
use startop::topology::enumerate_topology;
use startop::wubetti::wu_betti;
use startop::{io, registry, Error, SimplicialComplex};

use crate::{to_json, Failure, Format, MatrixKind, Outcome, RegionArg, SCHEMA};

/// Interaction cohomology is reported up to this many simplices.
const WU_BETTI_LIMIT: usize = 400;
/// ω₃ is reported up to this many simplices.
const WU3_LIMIT: usize = 2_000;

fn parse(e: Error) -> Failure {
    Failure::Parse(e.to_string())
}

fn random_graph(key: &str, seed: u64) -> Option<Result<Graph, Failure>> {
    let rest = key.strip_prefix("random:")?;
    let parsed = rest.split_once(':').and_then(|(n, m)| Some((n.parse::<u32>().ok()?, m.parse::<usize>().ok()?)));
    Some(match parsed {
        Some((n, m)) => Ok(random_graph_with_edges(&mut rng(seed), n, m)),
        None => Err(Failure::Parse(format!("expected random:N:M, got `{key}`"))),
    })
}

/// A file path if one exists, otherwise a registry key.
pub fn load(input: &str) -> Result<SimplicialComplex, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{input}: {e}")))?;
        return io::read_complex(&text).map_err(|e| Failure::Parse(format!("{input}: {e}")));
    }
    if let Some(g) = random_graph(input, 0) {
        return Ok(whitney_complex(&g?));
    }
    registry::lookup(input).map_err(|e| match e {
        Error::UnknownKey(_) => Failure::Parse(format!("`{input}` is neither a file nor a registry key")),
        e => parse(e),
    })
}

pub fn gen(key: &str, as_graph: bool, seed: u64, output: Option<&Path>) -> Outcome {
    let text = match random_graph(key, seed) {
        Some(g) => {
            let g = g?;
            if as_graph {
                io::graph_to_json(&g)
            } else {
                io::complex_to_json(&whitney_complex(&g))
            }
        }
        None if as_graph => match registry::lookup_graph(key).map_err(parse)? {
            Some(g) => io::graph_to_json(&g),
            None => return Err(Failure::Parse(format!("`{key}` has no graph form"))),
        },
        None => io::complex_to_json(&registry::lookup(key).map_err(parse)?),
    };
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn recognition(g: &SimplicialComplex) -> Value {
    json!({
        "contractible": is_contractible(g),
        "sphere": is_sphere(g),
        "ball": is_ball(g),
        "manifold": is_manifold(g),
        "manifold_with_boundary": is_manifold_with_boundary(g).map(|p| p.0),
    })
}

pub fn report(input: &str, topology_count: bool, limit: usize) -> Outcome {
    let g = load(input)?;
    let n = g.len();
    let mut r = json!({
        "schema": SCHEMA,
        "command": "report",
        "simplices": n,
        "vertices": g.vertices().len(),
        "dimension": g.dim(),
        "f_vector": g.f_vector(),
        "euler": g.euler(),
        "wu2": wu_characteristic(&g, 2).unwrap(),
        "wu3": (n <= WU3_LIMIT).then(|| wu_characteristic(&g, 3).unwrap()),
        "betti": betti_numbers(&g),
        "wu_betti": (n <= WU_BETTI_LIMIT).then(|| wu_betti(&g)),
        "fermi": fermi_characteristic(&g),
        "recognition": recognition(&g),
    });
    if topology_count {
        match enumerate_topology(&g, limit) {
            Ok(t) => r["open_set_count"] = json!(t.len()),
            Err(Error::LimitExceeded { limit, partial }) => {
                r["open_set_count"] = Value::Null;
                r["open_set_limit"] = json!({"limit": limit, "reached": partial});
                return Err(Failure::Budget(r));
            }
            Err(e) => return Err(parse(e)),
        }
    }
    Ok(to_json(&r))
}

pub fn recognize(input: &str) -> Outcome {
    let g = load(input)?;
    let mut r = recognition(&g);
    r["schema"] = json!(SCHEMA);
    r["command"] = json!("recognize");
    r["dimension"] = json!(g.dim());
    r["dehn_sommerville"] = json!(is_dehn_sommerville(&g, g.dim()));
    if let Some((_, bd)) = is_manifold_with_boundary(&g) {
        let facets: Vec<Vec<u32>> = bd.facets().iter().map(|f| f.vertices().to_vec()).collect();
        r["boundary_facets"] = json!(facets);
    }
    Ok(to_json(&r))
}

fn witness_json(w: &Witness) -> Value {
    let kind = match w.kind {
        WitnessKind::Isomorphism => json!("isomorphism"),
        WitnessKind::Projection(m) => json!({"projection": m}),
        WitnessKind::Search => json!("search"),
    };
    json!({"refinements": w.refinements, "kind": kind, "images": w.map.images()})
}

pub fn verdict_json(v: &HomeoVerdict) -> Value {
    let certificate = match &v.certificate {
        Certificate::Mismatch { invariant, left, right } => json!({
            "kind": "mismatch", "invariant": invariant.name(), "left": left, "right": right,
        }),
        Certificate::SameNormalForm { form, correspondence } => json!({
            "kind": "normal_form",
            "form": form,
            "correspondence": correspondence.iter().map(|(a, b)| [*a, *b]).collect::<Vec<_>>(),
        }),
        Certificate::Witnesses { forward, backward } => json!({
            "kind": "witnesses", "forward": witness_json(forward), "backward": witness_json(backward),
        }),
        Certificate::Exhausted { max_refinements, budget, used, forward_found, backward_found } => json!({
            "kind": "exhausted",
            "max_refinements": max_refinements,
            "budget": budget,
            "used": used,
            "forward_found": forward_found,
            "backward_found": backward_found,
        }),
    };
    json!({"schema": SCHEMA, "command": "homeo", "result": v.outcome.to_string(), "certificate": certificate})
}

pub fn homeo(a: &str, b: &str, max_refine: usize, budget: usize) -> Outcome {
    let (g, h) = (load(a)?, load(b)?);
    let v = homeomorphic(&g, &h, max_refine, budget);
    let out = verdict_json(&v);
    match v.outcome {
        Verdict::Inconclusive => Err(Failure::Budget(out)),
        _ => Ok(to_json(&out)),
    }
}

pub fn refine(input: &str, edge: Option<(u32, u32)>) -> Outcome {
    let g = load(input)?;
    let refined = match edge {
        None => barycentric_refine(&g),
        Some((a, b)) => {
            let (h, _) = edge_refine(&Graph::skeleton_of(&g), a, b).map_err(parse)?;
            whitney_complex(&h)
        }
    };
    Ok(io::complex_to_json(&refined))
}

fn matrix_out(g: &SimplicialComplex, name: &str, m: &IntMatrix, fmt: Format) -> String {
    match fmt {
        Format::Csv => m.to_csv(),
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "command": "matrix",
            "matrix": name,
            "legend": g.simplices().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "rows": m.to_rows(),
        })),
    }
}

pub fn matrix(input: &str, kind: MatrixKind, order: usize, region: RegionArg, fmt: Format) -> Outcome {
    let g = load(input)?;
    let (name, m) = match kind {
        MatrixKind::Connection => ("connection".to_string(), connection_matrix(&g).map_err(parse)?),
        MatrixKind::Green => {
            let (r, rn) = match region {
                RegionArg::Star => (Region::Star, "star"),
                RegionArg::Ball => (Region::Ball, "ball"),
                RegionArg::Sphere => (Region::Sphere, "sphere"),
            };
            (format!("green_{order}_{rn}"), green_matrix(&g, order, r).map_err(parse)?)
        }
        MatrixKind::Derivative => ("derivative".to_string(), exterior_derivative(&g)),
        MatrixKind::Hodge => ("hodge".to_string(), hodge_laplacian(&g)),
    };
    Ok(matrix_out(&g, &name, &m, fmt))
}

fn numbers_out(name: &str, b: &[usize], fmt: Format) -> String {
    match fmt {
        Format::Csv => b.iter().map(usize::to_string).collect::<Vec<_>>().join(",") + "\n",
        Format::Json => to_json(&json!({"schema": SCHEMA, "command": name, name: b})),
    }
}

pub fn betti(input: &str, fmt: Format) -> Outcome {
    Ok(numbers_out("betti", &betti_numbers(&load(input)?), fmt))
}

pub fn wubetti(input: &str, fmt: Format) -> Outcome {
    Ok(numbers_out("wubetti", &wu_betti(&load(input)?), fmt))
}

pub fn lefschetz(input: &str, map: &Path) -> Outcome {
    let g = load(input)?;
    let text = std::fs::read_to_string(map).map_err(|e| Failure::Parse(format!("{}: {e}", map.display())))?;
    let vm = io::vertex_map_from_json(&text).map_err(parse)?;
    let f = SimplexMap::from_vertex_map(&g, &g, &vm).map_err(parse)?;
    let number = lefschetz_number(&f, &g).map_err(parse)?;
    let index = fixed_point_index_sum(&f, &g);
    let fixed: Vec<String> = fixed_simplices(&f).into_iter().map(|i| g.simplex(i).to_string()).collect();
    let r = json!({
        "schema": SCHEMA,
        "command": "lefschetz",
        "lefschetz_number": number,
        "index_sum": index,
        "fixed_simplices": fixed,
        "agree": number == index,
    });
    if number == index {
        Ok(to_json(&r))
    } else {
        Err(Failure::Property(r))
    }
}
