//! Shared memo of Schur products `s_μ s_ν`, keyed by the unordered pair.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use crate::lr::lr_product_counts;
use crate::partition::Partition;

/// `(θ, c^θ_{μν})` sorted by `θ`.
pub type ProductTerms = Arc<[(Partition, u64)]>;

/// Default bound on the number of cached terms across all products.
pub const DEFAULT_CAPACITY: usize = 4_000_000;

pub struct LrCache {
    map: RwLock<HashMap<(Partition, Partition), ProductTerms>>,
    terms: AtomicUsize,
    capacity: usize,
}

impl Default for LrCache {
    fn default() -> Self {
        LrCache::new(DEFAULT_CAPACITY)
    }
}

fn key(mu: &Partition, nu: &Partition) -> (Partition, Partition) {
    if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    }
}

/// Computes `s_μ s_ν` without touching any cache.
pub fn compute_product(mu: &Partition, nu: &Partition) -> ProductTerms {
    // fewer letters in the content means a shallower search
    let (inner, content) = if (nu.size(), nu.len()) <= (mu.size(), mu.len()) {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let mut terms: Vec<(Partition, u64)> = lr_product_counts(inner, content).into_iter().collect();
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    terms.into()
}

impl LrCache {
    /// A cache that stops admitting new products once `capacity` terms are stored.
    pub fn new(capacity: usize) -> Self {
        LrCache {
            map: RwLock::new(HashMap::new()),
            terms: AtomicUsize::new(0),
            capacity,
        }
    }

    /// The process-wide cache used by [`crate::schur::SchurExpansion::multiply`].
    pub fn global() -> &'static LrCache {
        static GLOBAL: OnceLock<LrCache> = OnceLock::new();
        GLOBAL.get_or_init(LrCache::default)
    }

    pub fn product(&self, mu: &Partition, nu: &Partition) -> ProductTerms {
        let k = key(mu, nu);
        if let Some(hit) = self.map.read().expect("cache lock poisoned").get(&k) {
            return Arc::clone(hit);
        }
        let terms = compute_product(&k.0, &k.1);
        self.admit(k, Arc::clone(&terms));
        terms
    }

    /// Single coefficient `c^θ_{μν}`, read off the cached product.
    pub fn coefficient(&self, mu: &Partition, nu: &Partition, theta: &Partition) -> u64 {
        if theta.size() != mu.size() + nu.size() {
            return 0;
        }
        let terms = self.product(mu, nu);
        terms.binary_search_by(|(t, _)| t.cmp(theta)).map_or(0, |i| terms[i].1)
    }

    /// Stores a complete product, e.g. one read back from disk.
    pub fn insert_product(&self, mu: &Partition, nu: &Partition, mut terms: Vec<(Partition, u64)>) {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        self.admit(key(mu, nu), terms.into());
    }

    fn admit(&self, k: (Partition, Partition), terms: ProductTerms) {
        let n = terms.len();
        if self.terms.load(Ordering::Relaxed) + n > self.capacity {
            return;
        }
        let mut map = self.map.write().expect("cache lock poisoned");
        if map.insert(k, terms).is_none() {
            self.terms.fetch_add(n, Ordering::Relaxed);
        }
    }

    /// Every cached product, ordered by key.
    pub fn snapshot(&self) -> Vec<((Partition, Partition), ProductTerms)> {
        let map = self.map.read().expect("cache lock poisoned");
        let mut out: Vec<_> = map.iter().map(|(k, v)| (k.clone(), Arc::clone(v))).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("cache lock poisoned").clear();
        self.terms.store(0, Ordering::Relaxed);
    }
}
