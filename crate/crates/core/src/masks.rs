//! Simplices as vertex bitmasks, for hosts with at most 128 vertices.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;

pub(crate) struct MaskIndex {
    masks: Vec<u128>,
    index: HashMap<u128, usize>,
}

impl MaskIndex {
    pub(crate) fn new(host: &SimplicialComplex) -> Option<Self> {
        let verts = host.vertices();
        if verts.len() > 128 {
            return None;
        }
        let masks: Vec<u128> = host
            .simplices()
            .iter()
            .map(|s| s.vertices().iter().fold(0u128, |m, v| m | 1 << verts.binary_search(v).unwrap()))
            .collect();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Some(MaskIndex { masks, index })
    }

    pub(crate) fn mask(&self, i: usize) -> u128 {
        self.masks[i]
    }

    pub(crate) fn lookup(&self, m: u128) -> Option<usize> {
        self.index.get(&m).copied()
    }
}
