use std::collections::HashMap;

use crate::boolfn::{canonical, ess, zhegalkin, CanonicalForm, TruthTable, MAX_CANON_ARITY};
use crate::error::Result;
use crate::hypergraph::{function_of, isomorphic, reduced, Hypergraph};

/// How equivalence of functions is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// Truth-table canonical forms up to the permutation cap, hypergraph
    /// isomorphism of reduced Zhegalkin hypergraphs above it.
    #[default]
    Auto,
    /// Always hypergraph isomorphism.
    Isomorphism,
}

/// Assigns class ids to functions, one id per equivalence class seen so far.
#[derive(Debug, Default)]
pub struct ClassIndex {
    backend: Backend,
    by_canon: HashMap<CanonicalForm, usize>,
    by_iso: Vec<(Hypergraph, usize)>,
    next: usize,
}

impl ClassIndex {
    pub fn new(backend: Backend) -> Self {
        Self {
            backend,
            ..Self::default()
        }
    }

    pub fn len(&self) -> usize {
        self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next == 0
    }

    fn fresh(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    pub fn insert_function(&mut self, f: &TruthTable) -> Result<usize> {
        if self.backend == Backend::Auto && ess(f) <= MAX_CANON_ARITY {
            return self.insert_canonical(canonical(f)?);
        }
        self.insert_reduced(reduced(&zhegalkin(f)))
    }

    /// Class of `f_h`. Works on hypergraphs above the truth-table cap.
    pub fn insert_hypergraph(&mut self, h: &Hypergraph) -> Result<usize> {
        let r = reduced(h);
        if self.backend == Backend::Auto && r.n_vertices() <= MAX_CANON_ARITY {
            return self.insert_canonical(canonical(&function_of(&r)?)?);
        }
        self.insert_reduced(r)
    }

    fn insert_canonical(&mut self, c: CanonicalForm) -> Result<usize> {
        if let Some(&id) = self.by_canon.get(&c) {
            return Ok(id);
        }
        let id = self.fresh();
        self.by_canon.insert(c, id);
        Ok(id)
    }

    fn insert_reduced(&mut self, r: Hypergraph) -> Result<usize> {
        for (rep, id) in &self.by_iso {
            if isomorphic(rep, &r)?.is_some() {
                return Ok(*id);
            }
        }
        let id = self.fresh();
        self.by_iso.push((r, id));
        Ok(id)
    }
}
