//! Minors, the Petersen family and intrinsic linking.
//!
//! A graph is intrinsically linked exactly when it has a Petersen-family
//! minor. Intrinsic knotting is only certified through two sufficient
//! conditions: a K7 minor, or a dominating vertex whose removal leaves an
//! intrinsically linked graph. [`IkVerdict::Unknown`] is not a proof of
//! anything.

mod minor;
mod moves;

pub use minor::{has_minor, verify_minor_witness, MinorOutcome, MinorWitness, MAX_MINOR_HOST, MAX_MINOR_TARGET};
pub use moves::{delta_y, is_clean_star, triangles, y_delta};

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::constructions::complete;
use crate::graph::{Graph, VertexSet};
use crate::iso::{canonical_form, CanonicalForm};
use crate::{Error, Result};

/// Largest order accepted by [`saturate_nil`] and [`is_max_nil`].
pub const MAX_SATURATE_ORDER: usize = 14;

/// Every graph reachable from `seed` by triangle-to-star moves and clean
/// star-to-triangle moves, one per isomorphism class, sorted by
/// (order, canonical form).
pub fn move_closure(seed: &Graph) -> Result<Vec<Graph>> {
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut queue = VecDeque::from([*seed]);
    seen.insert(canonical_form(seed)?, *seed);
    while let Some(g) = queue.pop_front() {
        let mut next: Vec<Graph> = Vec::new();
        for t in triangles(&g) {
            next.push(delta_y(&g, t)?);
        }
        for v in 0..g.order() {
            if is_clean_star(&g, v) {
                next.push(y_delta(&g, v)?);
            }
        }
        for h in next {
            let form = canonical_form(&h)?;
            if let alloc::collections::btree_map::Entry::Vacant(e) = seen.entry(form) {
                e.insert(h);
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<(usize, CanonicalForm, Graph)> =
        seen.into_iter().map(|(f, g)| (g.order(), f, g)).collect();
    out.sort();
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// The seven graphs obtained from K6 by triangle/star exchanges.
#[derive(Debug, Clone)]
pub struct PetersenFamily {
    members: Vec<Graph>,
    forms: Vec<CanonicalForm>,
}

/// A Petersen-family minor certifying intrinsic linking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlCertificate {
    pub member: Graph,
    pub witness: MinorWitness,
}

impl IlCertificate {
    pub fn verify(&self, g: &Graph, family: &PetersenFamily) -> bool {
        family.contains(&self.member) && verify_minor_witness(g, &self.member, &self.witness)
    }
}

impl PetersenFamily {
    pub fn generate() -> Self {
        let members = move_closure(&complete(6)).expect("family members are small");
        let forms = members.iter().map(|g| canonical_form(g).expect("small")).collect();
        PetersenFamily { members, forms }
    }

    /// Members in ascending order, fewest vertices first.
    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn contains(&self, g: &Graph) -> bool {
        canonical_form(g).is_ok_and(|f| self.forms.contains(&f))
    }

    /// A Petersen-family minor of `g`, trying members in ascending order.
    pub fn is_il(&self, g: &Graph) -> Result<Option<IlCertificate>> {
        if g.order() > MAX_MINOR_HOST {
            return Err(Error::OrderTooLarge { order: g.order(), max: MAX_MINOR_HOST });
        }
        // every member has 15 edges and at least 6 vertices
        if g.order() < 6 || g.edge_count() < 15 {
            return Ok(None);
        }
        for member in &self.members {
            if let MinorOutcome::Found(witness) = has_minor(g, member, None)? {
                return Ok(Some(IlCertificate { member: *member, witness }));
            }
        }
        Ok(None)
    }

    pub fn is_ik_sufficient(&self, g: &Graph) -> Result<IkVerdict> {
        let n = g.order();
        if n > MAX_MINOR_HOST {
            return Err(Error::OrderTooLarge { order: n, max: MAX_MINOR_HOST });
        }
        if let MinorOutcome::Found(w) = has_minor(g, &complete(7), None)? {
            return Ok(IkVerdict::ByK7(w));
        }
        for apex in (0..n).filter(|&v| g.degree(v) + 1 == n) {
            let rest = g.delete_vertex(apex)?;
            if let Some(mut cert) = self.is_il(&rest)? {
                for s in cert.witness.branch_sets.iter_mut() {
                    *s = VertexSet::from_vertices(s.iter().map(|v| if v >= apex { v + 1 } else { v }));
                }
                return Ok(IkVerdict::ByConeOverIl { apex, certificate: cert });
            }
        }
        Ok(IkVerdict::Unknown)
    }

    /// Adds non-edges in lexicographic order whenever the graph stays free of
    /// family minors. One pass suffices: a non-edge rejected once stays
    /// rejected because adding edges never destroys a minor.
    pub fn saturate_nil(&self, g: &Graph) -> Result<Graph> {
        check_nil_input(self, g)?;
        let mut h = *g;
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                if h.has_edge(u, v) {
                    continue;
                }
                let bigger = h.with_edge(u, v)?;
                if self.is_il(&bigger)?.is_none() {
                    h = bigger;
                }
            }
        }
        Ok(h)
    }

    /// Whether `g` is free of family minors and every added edge creates one.
    pub fn is_max_nil(&self, g: &Graph) -> Result<bool> {
        check_nil_input(self, g)?;
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) && self.is_il(&g.with_edge(u, v)?)?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn check_nil_input(family: &PetersenFamily, g: &Graph) -> Result<()> {
    if g.order() > MAX_SATURATE_ORDER {
        return Err(Error::OrderTooLarge { order: g.order(), max: MAX_SATURATE_ORDER });
    }
    if family.is_il(g)?.is_some() {
        return Err(Error::InvalidArgument("the graph is already intrinsically linked"));
    }
    Ok(())
}

/// Sufficient conditions for intrinsic knotting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IkVerdict {
    ByK7(MinorWitness),
    /// `apex` is adjacent to every other vertex and the rest is intrinsically
    /// linked; the certificate's branch sets use the labels of the full graph.
    ByConeOverIl { apex: usize, certificate: IlCertificate },
    /// Neither condition applies. Not a proof that the graph is not IK.
    Unknown,
}

/// The Petersen family; see [`PetersenFamily`].
pub fn petersen_family() -> PetersenFamily {
    PetersenFamily::generate()
}

pub fn is_il(g: &Graph) -> Result<Option<IlCertificate>> {
    PetersenFamily::generate().is_il(g)
}

pub fn is_ik_sufficient(g: &Graph) -> Result<IkVerdict> {
    PetersenFamily::generate().is_ik_sufficient(g)
}

pub fn saturate_nil(g: &Graph) -> Result<Graph> {
    PetersenFamily::generate().saturate_nil(g)
}

pub fn is_max_nil(g: &Graph) -> Result<bool> {
    PetersenFamily::generate().is_max_nil(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_multipartite, icosahedron, octahedron, path, petersen, prism, wheel};
    use crate::iso::are_isomorphic;

    #[test]
    fn family_has_seven_members() {
        let fam = petersen_family();
        let m = fam.members();
        assert_eq!(m.len(), 7);
        assert!(m.iter().all(|g| g.edge_count() == 15));
        let orders: Vec<usize> = m.iter().map(Graph::order).collect();
        assert_eq!(orders, [6, 7, 7, 8, 8, 9, 10]);
        assert!(fam.contains(&complete(6)));
        assert!(fam.contains(&petersen()));
        assert!(fam.contains(&complete_multipartite(&[3, 3, 1])));
        // the family is closed under both moves
        for g in m {
            assert_eq!(move_closure(g).unwrap().len(), 7);
        }
    }

    #[test]
    fn il_examples() {
        let fam = petersen_family();
        for g in [complete(6), petersen(), complete_multipartite(&[3, 3, 1])] {
            let cert = fam.is_il(&g).unwrap().expect("intrinsically linked");
            assert!(cert.verify(&g, &fam));
        }
        for g in [complete(5), path(5), octahedron(), prism(), wheel(8), icosahedron()] {
            assert!(fam.is_il(&g).unwrap().is_none(), "{g:?}");
        }
    }

    #[test]
    fn ik_examples() {
        let fam = petersen_family();
        assert!(matches!(fam.is_ik_sufficient(&complete(7)).unwrap(), IkVerdict::ByK7(_)));
        let cone = complete(6).join(&complete(1)).unwrap();
        assert!(matches!(fam.is_ik_sufficient(&cone).unwrap(), IkVerdict::ByK7(_)));
        let cone = petersen().join(&complete(1)).unwrap();
        match fam.is_ik_sufficient(&cone).unwrap() {
            IkVerdict::ByConeOverIl { apex, certificate } => {
                assert_eq!(apex, 10);
                assert!(certificate.verify(&cone, &fam));
                assert!(certificate.witness.branch_sets.iter().all(|s| !s.contains(apex)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(fam.is_ik_sufficient(&path(5)).unwrap(), IkVerdict::Unknown);
    }

    #[test]
    fn saturation_reaches_a_maximal_graph() {
        let fam = petersen_family();
        let g = fam.saturate_nil(&Graph::empty(6).unwrap()).unwrap();
        assert!(fam.is_max_nil(&g).unwrap());
        // K6 minus one edge is the only maximal choice on six vertices
        assert_eq!(g.edge_count(), 14);
        let g7 = fam.saturate_nil(&path(7)).unwrap();
        assert!(fam.is_max_nil(&g7).unwrap());
        assert!(fam.is_max_nil(&complete(5)).unwrap());
        assert!(fam.is_max_nil(&complete(6)).is_err());
        assert!(fam.saturate_nil(&complete(6)).is_err());
    }

    #[test]
    fn family_member_by_delta_y_from_k6() {
        let y = delta_y(&complete(6), VertexSet::from_vertices([0, 1, 2])).unwrap();
        assert!(petersen_family().contains(&y));
        assert!(!are_isomorphic(&y, &complete_multipartite(&[3, 3, 1])));
    }
}
