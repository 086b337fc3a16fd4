use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mpoly::{Homogeneity, Monomial, Parity, Poly, Table};

/// Algebra map given by the images of the source generators.
#[derive(Clone)]
pub struct RingMorphism {
    source: Table,
    target: Table,
    images: Vec<Poly>,
    bigraded: bool,
    v_graded: bool,
}

impl fmt::Debug for RingMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (g, img) in self.source.generators().iter().zip(&self.images) {
            m.entry(&g.name, &img.to_string());
        }
        m.finish()
    }
}

impl RingMorphism {
    pub fn new(source: &Table, target: &Table, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::OutOfRange(format!("{} images for {} generators", images.len(), source.len())));
        }
        let mut bigraded = true;
        let mut v_graded = true;
        for (g, img) in source.generators().iter().zip(&images) {
            if !Poly::same_table(img, &Poly::zero(target)) {
                return Err(Error::TableMismatch);
            }
            if g.parity == Parity::Odd {
                let odd_ok = img.terms().all(|(m, _)| target.odd_count(m) % 2 == 1);
                if !odd_ok {
                    return Err(Error::DegreeMismatch(format!(
                        "odd generator `{}` must map to an odd element",
                        g.name
                    )));
                }
            }
            bigraded &= img.is_homogeneous_of(g.degree);
            v_graded &= img.is_v_homogeneous_of(g.degree.dv);
        }
        Ok(RingMorphism { source: source.clone(), target: target.clone(), images, bigraded, v_graded })
    }

    /// Build from a closure naming the image of each source generator.
    pub fn by_name<F>(source: &Table, target: &Table, mut image: F) -> Result<Self>
    where
        F: FnMut(&str) -> Result<Poly>,
    {
        let images = source.generators().iter().map(|g| image(&g.name)).collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(table: &Table) -> Self {
        let images = (0..table.len()).map(|i| Poly::var(table, i)).collect();
        Self::new(table, table, images).expect("identity is well formed")
    }

    pub fn source(&self) -> &Table {
        &self.source
    }

    pub fn target(&self) -> &Table {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Result<&Poly> {
        Ok(&self.images[self.source.index_of(name)?])
    }

    /// Every generator image is homogeneous of the generator's bidegree.
    pub fn is_degree_preserving(&self) -> bool {
        self.bidegree_certificate().is_ok()
    }

    /// Every generator image is homogeneous of the generator's v-degree.
    pub fn preserves_v_degree(&self) -> bool {
        self.v_graded
    }

    /// `Ok(())` when bidegree-preserving, otherwise the first offending
    /// generator with its image status.
    pub fn bidegree_certificate(&self) -> Result<()> {
        if self.bigraded {
            return Ok(());
        }
        for (g, img) in self.source.generators().iter().zip(&self.images) {
            if !img.is_homogeneous_of(g.degree) {
                let status = match img.homogeneity() {
                    Homogeneity::Homogeneous(d) => format!("degree {d}"),
                    Homogeneity::Inhomogeneous => "inhomogeneous".to_string(),
                    Homogeneity::Zero => "zero".to_string(),
                };
                return Err(Error::DegreeMismatch(format!("`{}` of degree {} maps to {status}", g.name, g.degree)));
            }
        }
        unreachable!("bigraded flag out of sync")
    }

    /// Image of a monomial (ordered product of generator images).
    pub fn apply_monomial(&self, m: &Monomial) -> Poly {
        let mut acc = Poly::one(&self.target);
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.images[i].pow(e);
            }
        }
        acc
    }

    /// Ring-homomorphic image of `p`.
    pub fn substitute(&self, p: &Poly) -> Result<Poly> {
        if !Poly::same_table(p, &Poly::zero(&self.source)) {
            return Err(Error::TableMismatch);
        }
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut acc = Poly::constant(&self.target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers.entry((i, e)).or_insert_with(|| self.images[i].pow(e));
                acc = &acc * pw;
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RingMorphism) -> Result<RingMorphism> {
        if !(std::sync::Arc::ptr_eq(&self.target, &next.source) || *self.target == *next.source) {
            return Err(Error::TableMismatch);
        }
        let images = self.images.iter().map(|p| next.substitute(p)).collect::<Result<Vec<_>>>()?;
        RingMorphism::new(&self.source, &next.target, images)
    }
}

/// Image of source monomials under a fixed morphism, memoised on the
/// monomial with its last factor removed.
pub struct MonomialImages<'a> {
    morphism: &'a RingMorphism,
    cache: HashMap<Monomial, Poly>,
}

impl<'a> MonomialImages<'a> {
    pub fn new(morphism: &'a RingMorphism) -> Self {
        MonomialImages { morphism, cache: HashMap::new() }
    }

    pub fn image(&mut self, m: &Monomial) -> Poly {
        if let Some(p) = self.cache.get(m) {
            return p.clone();
        }
        let Some(last) = m.0.iter().rposition(|&e| e > 0) else {
            return Poly::one(self.morphism.target());
        };
        let mut prefix = m.clone();
        prefix.0[last] -= 1;
        let head = self.image(&prefix);
        let p = &head * &self.morphism.images()[last];
        self.cache.insert(m.clone(), p.clone());
        p
    }
}
