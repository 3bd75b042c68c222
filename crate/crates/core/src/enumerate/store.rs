//! Deterministic candidate stores keyed by canonical code.

use crate::digraph::{canonical_code, CanonicalCode, Digraph};
use std::collections::BTreeMap;
use std::sync::Mutex;

/// A set of digraphs up to isomorphism.
///
/// Members are kept as canonical forms keyed by their [`CanonicalCode`], so
/// no two members are isomorphic, insertion order never leaks into the
/// contents, and iteration in ascending code order is deterministic for any
/// thread count. `insert_if_new` is the only synchronised operation.
pub struct CandidateStore {
    inner: Mutex<BTreeMap<CanonicalCode, Digraph>>,
}

impl CandidateStore {
    pub fn new() -> Self {
        CandidateStore { inner: Mutex::new(BTreeMap::new()) }
    }

    /// Inserts the isomorphism class of `d` and reports whether it was new.
    pub fn insert_if_new(&self, d: &Digraph) -> bool {
        let code = canonical_code(d);
        let mut map = self.inner.lock().expect("store mutex poisoned");
        match map.entry(code) {
            std::collections::btree_map::Entry::Occupied(_) => false,
            std::collections::btree_map::Entry::Vacant(slot) => {
                let canonical = slot.key().decode();
                slot.insert(canonical);
                true
            }
        }
    }

    pub fn contains(&self, d: &Digraph) -> bool {
        let code = canonical_code(d);
        self.inner.lock().expect("store mutex poisoned").contains_key(&code)
    }

    pub fn len(&self) -> usize {
        self.inner.lock().expect("store mutex poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical member digraphs in ascending code order.
    pub fn members(&self) -> Vec<Digraph> {
        self.inner
            .lock()
            .expect("store mutex poisoned")
            .values()
            .copied()
            .collect()
    }

    /// The member codes in ascending order.
    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.inner
            .lock()
            .expect("store mutex poisoned")
            .keys()
            .cloned()
            .collect()
    }
}

impl Default for CandidateStore {
    fn default() -> Self {
        CandidateStore::new()
    }
}
