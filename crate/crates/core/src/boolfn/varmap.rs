use crate::error::{Error, Result};

/// A total map from `{0..domain}` to `{0..codomain}`.
///
/// Serves both as a minor substitution `g(a) = f(a ∘ σ)` and as a hypergraph
/// vertex map. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarMap {
    codomain: usize,
    image: Vec<usize>,
}

impl VarMap {
    pub fn new(image: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&t| t >= codomain) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: codomain,
            });
        }
        Ok(Self { codomain, image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            codomain: n,
            image: (0..n).collect(),
        }
    }

    /// Sends `i` to `j` and fixes every other index.
    pub fn identification(n: usize, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, size: n });
            }
        }
        let mut image: Vec<usize> = (0..n).collect();
        image[i] = j;
        Ok(Self { codomain: n, image })
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &VarMap) -> Result<VarMap> {
        if other.domain_size() != self.codomain {
            return Err(Error::SizeMismatch {
                expected: self.codomain,
                found: other.domain_size(),
            });
        }
        Ok(VarMap {
            codomain: other.codomain,
            image: self.image.iter().map(|&t| other.image[t]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        self.image
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain];
        for &t in &self.image {
            seen[t] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Every map from `{0..domain}` to `{0..codomain}`, in lexicographic order.
    pub fn all(domain: usize, codomain: usize) -> impl Iterator<Item = VarMap> {
        let total = if codomain == 0 {
            usize::from(domain == 0)
        } else {
            codomain.pow(domain as u32)
        };
        (0..total).map(move |mut code| {
            let mut image = vec![0; domain];
            for slot in image.iter_mut().rev() {
                *slot = code % codomain;
                code /= codomain;
            }
            VarMap { codomain, image }
        })
    }
}
