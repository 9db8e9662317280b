//! Property suites run by `startop verify`.

use rand::Rng;
use serde_json::{json, Value};
use startop::characteristics::{ball_formula_check, sphere_sum, valuation_defect, wu, wu_fast};
use startop::dynamics::{
    fixed_simplices, graph_endomorphisms, is_chain_map, lefschetz_check, lefschetz_number, random_monotone_map,
    SimplexMap,
};
use startop::energy::{connection_matrix, curvature, energy_sum, green_matrix, supertrace, Region};
use startop::graph::{barycentric_refine, edge_refine, whitney_complex, Graph};
use startop::hodge::betti;
use startop::linalg::IntMatrix;
use startop::random::{random_complex, rng};
use startop::recognition::is_manifold;
use startop::{registry, SimplexSet, SimplicialComplex};

use crate::{to_json, Failure, Outcome, Suite, SCHEMA};

/// Registry complexes above this size are skipped by the quadratic suites.
const SIZE_LIMIT: usize = 150;

struct Checks {
    rows: Vec<Value>,
    failures: usize,
}

impl Checks {
    fn add(&mut self, name: &str, subject: &str, passed: bool) {
        if !passed {
            self.failures += 1;
        }
        self.rows.push(json!({"name": name, "subject": subject, "passed": passed}));
    }
}

fn subjects(seed: u64, count: usize, limit: usize) -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = registry::standard()
        .into_iter()
        .filter(|(_, g)| !g.is_empty() && g.len() <= limit)
        .map(|(k, g)| (k.to_string(), g))
        .collect();
    let mut r = rng(seed);
    for i in 0..count {
        out.push((format!("random#{i}"), random_complex(&mut r, 60)));
    }
    out
}

fn full_wu(g: &SimplicialComplex, m: usize) -> i64 {
    wu(&SimplexSet::full(g), m).unwrap()
}

fn energy(c: &mut Checks, seed: u64, count: usize) {
    for (name, g) in subjects(seed, count, SIZE_LIMIT) {
        let l = connection_matrix(&g).unwrap();
        let g1 = green_matrix(&g, 1, Region::Star).unwrap();
        c.add("inverse", &name, l.mul(&g1) == IntMatrix::identity(g.len()));
        c.add("sum_g1_is_euler", &name, g1.sum() == g.euler());
        c.add("sum_g2_is_wu2", &name, green_matrix(&g, 2, Region::Star).unwrap().sum() == full_wu(&g, 2));
        if g.len() <= 60 {
            c.add("sum_g3_is_wu3", &name, energy_sum(&g, 3).unwrap() == full_wu(&g, 3));
        }
        let fermi: i64 = (0..g.len()).map(|i| g.omega(i)).product();
        c.add("det_is_fermi", &name, l.determinant() == fermi.into());
        c.add("supertrace", &name, supertrace(&g).unwrap() == g.euler());
        c.add("sphere_sum_vanishes", &name, sphere_sum(&g, 2).unwrap() == 0);
    }
}

fn gauss_bonnet(c: &mut Checks, seed: u64, count: usize) {
    for (name, g) in subjects(seed, count, SIZE_LIMIT) {
        let k: i64 = g.simplices().iter().map(|x| curvature(&g, x).unwrap()).sum();
        c.add("curvature_sums_to_euler", &name, k == g.euler());
        for m in 2..=3 {
            c.add(&format!("star_formula_m{m}"), &name, wu_fast(&g, m).unwrap() == full_wu(&g, m));
        }
        c.add("ball_formula", &name, ball_formula_check(&g));
    }
}

fn lefschetz(c: &mut Checks, seed: u64, count: usize) {
    for (name, g) in subjects(seed, count, SIZE_LIMIT) {
        let id = SimplexMap::identity(&g);
        c.add("identity_is_euler", &name, lefschetz_number(&id, &g).unwrap() == g.euler());
    }
    for key in ["cycle:4", "complete:3"] {
        let g = registry::lookup(key).unwrap();
        let all = graph_endomorphisms(&g).iter().all(|f| lefschetz_check(f, &g).unwrap());
        c.add("endomorphisms", key, all);
    }
    let k4 = barycentric_refine(&registry::lookup("complete:4").unwrap());
    let mut r = rng(seed);
    let mut fixed = true;
    let mut agree = true;
    for _ in 0..count.max(1) * 10 {
        let f = random_monotone_map(&mut r, &k4);
        fixed &= !fixed_simplices(&f).is_empty();
        if is_chain_map(&f, &k4) {
            agree &= lefschetz_check(&f, &k4).unwrap();
        }
    }
    c.add("random_maps_have_fixed_simplices", "barycentric(complete:4)", fixed);
    c.add("random_maps_index_sum", "barycentric(complete:4)", agree);
}

fn valuation(c: &mut Checks, seed: u64, count: usize) {
    let mut r = rng(seed);
    for (name, g) in subjects(seed, count, 60) {
        let mut ok = true;
        for _ in 0..10 {
            let mut pick = || {
                let idx: Vec<usize> = (0..g.len()).filter(|_| r.random_bool(0.2)).collect();
                SimplexSet::from_indices(&g, idx).open_hull()
            };
            let (u, v) = (pick(), pick());
            for m in 1..=3 {
                ok &= valuation_defect(&u, &v, m).unwrap() == 0;
            }
        }
        c.add("open_set_valuation", &name, ok);
    }
    // Two closed circles sharing a point: ω₂ is not additive on closed sets.
    let c4 = registry::lookup("cycle:4").unwrap();
    let x = c4.wedge_sum(1, &c4, 1).unwrap();
    let half = |lo: u32, hi: u32| {
        let s: Vec<usize> = (0..x.len())
            .filter(|&i| x.simplex(i).vertices().iter().all(|&v| v == 1 || (lo..=hi).contains(&v)))
            .collect();
        SimplexSet::from_indices(&x, s)
    };
    let defect = valuation_defect(&half(2, 4), &half(6, 8), 2).unwrap();
    c.add("closed_set_counterexample", "figure8", defect != 0);
}

fn refinement(c: &mut Checks, seed: u64, count: usize) {
    for (name, g) in subjects(seed, count, SIZE_LIMIT) {
        let g1 = barycentric_refine(&g);
        c.add("euler", &name, g.euler() == g1.euler());
        c.add("wu2", &name, wu_fast(&g, 2).unwrap() == wu_fast(&g1, 2).unwrap());
        c.add("betti", &name, betti(&g) == betti(&g1));
        if g.len() <= 60 {
            c.add("manifold_verdict", &name, is_manifold(&g) == is_manifold(&g1));
        }
    }
    let mut h = Graph::skeleton_of(&registry::lookup("octahedron").unwrap());
    let mut r = rng(seed);
    let mut ok = true;
    for _ in 0..5 {
        let edges = h.edges();
        let (a, b) = edges[r.random_range(0..edges.len())];
        h = edge_refine(&h, a, b).unwrap().0;
        let w = whitney_complex(&h);
        ok &= is_manifold(&w) == Some(2) && w.euler() == 2;
    }
    c.add("edge_refined_surface", "octahedron", ok);
}

pub fn run(suite: Suite, seed: u64, count: usize) -> Outcome {
    let mut c = Checks { rows: Vec::new(), failures: 0 };
    let name = match suite {
        Suite::Energy => {
            energy(&mut c, seed, count);
            "energy"
        }
        Suite::Gaussbonnet => {
            gauss_bonnet(&mut c, seed, count);
            "gaussbonnet"
        }
        Suite::Lefschetz => {
            lefschetz(&mut c, seed, count);
            "lefschetz"
        }
        Suite::Valuation => {
            valuation(&mut c, seed, count);
            "valuation"
        }
        Suite::Refinement => {
            refinement(&mut c, seed, count);
            "refinement"
        }
    };
    let out = json!({
        "schema": SCHEMA,
        "command": "verify",
        "suite": name,
        "seed": seed,
        "count": count,
        "checks": c.rows,
        "failures": c.failures,
        "passed": c.failures == 0,
    });
    if c.failures == 0 {
        Ok(to_json(&out))
    } else {
        Err(Failure::Property(out))
    }
}
