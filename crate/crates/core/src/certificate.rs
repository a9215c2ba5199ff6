//! Certificates for `F_k` and the full per-k certification used by `verify`.
//!
//! Each edge of `F_k` is paired with the 5-cycle of the inductive layer at
//! which it most recently entered the construction: the layer `k' <= k` with
//! `e ∈ F_k' \ F_(k'-1)`. `F_k` is not monotone in `k` (for odd `k` some edges
//! of `F_(k-1)` drop out), so "most recently" matters.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::andrasfai::{self, require_k};
use crate::bipartify::{
    delta_f, delta_f_by_difference, f, f_size, partition_ab, u1, u2,
    verify_minimal_bipartification, witness_c, witness_d,
};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, ColoringDefect, CycleWitness, Edge, EdgeSet, Removal};
use crate::report::{Counterexample, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessKind {
    /// The 5-cycle `And_2` itself, for the single edge `{v1, v2}`.
    Base,
    C { j: usize },
    D { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignatedWitness {
    pub layer: usize,
    #[serde(flatten)]
    pub kind: WitnessKind,
    pub cycle: CycleWitness,
}

/// The witness an edge of `F_k` receives at the layer where it last entered.
/// `None` if `e` is not in `F_k`.
pub fn designated_witness(k: usize, e: &Edge) -> Result<Option<DesignatedWitness>> {
    require_k(k, 2)?;
    if !f(k)?.contains(e) {
        return Ok(None);
    }
    let (a, b) = e.endpoints();
    for layer in (3..=k).rev() {
        let top = 3 * layer - 4;
        if b == top && a < top && (top - 1 - a) % 3 == 0 {
            let j = (top - 1 - a) / 3;
            if j < layer / 2 {
                return Ok(Some(DesignatedWitness {
                    layer,
                    kind: WitnessKind::C { j },
                    cycle: witness_c(layer, j)?,
                }));
            }
        }
        let h = (layer - 1) / 2;
        if layer % 2 == 1 && b + 2 == 3 * h && a % 3 == 0 && a / 3 < h {
            let i = a / 3;
            return Ok(Some(DesignatedWitness {
                layer,
                kind: WitnessKind::D { i },
                cycle: witness_d(layer, i)?,
            }));
        }
    }
    if e.endpoints() == (1, 2) {
        return Ok(Some(DesignatedWitness {
            layer: 2,
            kind: WitnessKind::Base,
            cycle: CycleWitness::new(vec![1, 2, 3, 4, 0])?,
        }));
    }
    Err(Error::InvalidCycle(format!(
        "no inductive layer introduces {e} into F_{k}"
    )))
}

/// `F_k` restricted to the layers `<= k`, with `F_1` taken as empty.
fn f_or_empty(k: usize) -> Result<EdgeSet> {
    if k < 2 {
        Ok(EdgeSet::new())
    } else {
        f(k)
    }
}

/// Checks a designated witness for `e` inside `And_k`: a genuine 5-cycle
/// that meets `F_layer` in exactly `e` and avoids `F_(layer-1)`.
pub fn check_designated(
    k: usize,
    e: &Edge,
    w: &DesignatedWitness,
) -> Result<std::result::Result<(), Counterexample>> {
    let n = andrasfai::vertex_count(k);
    let genuine = w.cycle.len() == 5
        && w.layer <= k
        && w.cycle.edges().all(|c| c.v() < n && andrasfai::adjacent(c.u(), c.v()));
    if !genuine {
        return Ok(Err(Counterexample::Cycle(w.cycle.clone())));
    }
    let edges = w.cycle.edge_set();
    let hit = edges.intersection(&f(w.layer)?);
    if hit.len() != 1 || !hit.contains(e) {
        return Ok(Err(Counterexample::Edges(hit)));
    }
    let prev = edges.intersection(&f_or_empty(w.layer - 1)?);
    if !prev.is_empty() {
        return Ok(Err(Counterexample::Edges(prev)));
    }
    Ok(Ok(()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartificationCertificate {
    pub k: usize,
    pub fset: EdgeSet,
    pub u1: EdgeSet,
    pub u2: EdgeSet,
    pub partition: Bipartition,
    pub witnesses: BTreeMap<Edge, DesignatedWitness>,
}

impl BipartificationCertificate {
    pub fn build(k: usize) -> Result<Self> {
        let (u1, u2) = (u1(k)?, u2(k)?);
        let fset = u1.union(&u2);
        let mut witnesses = BTreeMap::new();
        for e in &fset {
            let w = designated_witness(k, e)?.expect("edge is in F_k");
            witnesses.insert(*e, w);
        }
        Ok(BipartificationCertificate {
            k,
            fset,
            u1,
            u2,
            partition: partition_ab(k)?,
            witnesses,
        })
    }

    pub fn to_document(&self) -> CertificateDocument {
        CertificateDocument {
            k: self.k,
            n: andrasfai::vertex_count(self.k),
            size: self.fset.len(),
            u1: self.u1.clone(),
            u2: self.u2.clone(),
            partition: self.partition.clone(),
            witnesses: self
                .witnesses
                .iter()
                .map(|(e, w)| (e.key(), w.clone()))
                .collect(),
        }
    }

    /// One line per edge: `u v layer kind index cycle...`.
    pub fn to_edgelist(&self) -> String {
        let mut out = format!("# k={} n={} |F|={}\n", self.k, andrasfai::vertex_count(self.k), self.fset.len());
        for (e, w) in &self.witnesses {
            let (kind, idx) = match w.kind {
                WitnessKind::Base => ("base", 0),
                WitnessKind::C { j } => ("C", j),
                WitnessKind::D { i } => ("D", i),
            };
            let cycle: Vec<String> = w.cycle.vertices().iter().map(|v| v.to_string()).collect();
            out.push_str(&format!(
                "{} {} {} {} {} {}\n",
                e.u(),
                e.v(),
                w.layer,
                kind,
                idx,
                cycle.join(" ")
            ));
        }
        out
    }
}

/// JSON form of a certificate. Witnesses are keyed by `"u-v"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub k: usize,
    pub n: usize,
    pub size: usize,
    pub u1: EdgeSet,
    pub u2: EdgeSet,
    pub partition: Bipartition,
    pub witnesses: BTreeMap<String, DesignatedWitness>,
}

impl CertificateDocument {
    /// Rebuilds the certificate, checking that keys and edges agree.
    pub fn into_certificate(self) -> Result<BipartificationCertificate> {
        let fset = self.u1.union(&self.u2);
        let mut witnesses = BTreeMap::new();
        for (key, w) in self.witnesses {
            let e = Edge::parse_key(&key)
                .ok_or_else(|| Error::InvalidCycle(format!("bad witness key {key:?}")))?;
            witnesses.insert(e, w);
        }
        Ok(BipartificationCertificate {
            k: self.k,
            fset,
            u1: self.u1,
            u2: self.u2,
            partition: self.partition,
            witnesses,
        })
    }
}

/// Checks a certificate against `And_k` from scratch.
pub fn check_certificate(cert: &BipartificationCertificate) -> Result<VerificationReport> {
    let k = cert.k;
    let g = andrasfai::andrasfai_graph(k)?;
    let mut r = VerificationReport::new();

    r.check(
        "F = U1 ∪ U2 with U1 ∩ U2 empty",
        if cert.fset == cert.u1.union(&cert.u2) && cert.u1.is_disjoint(&cert.u2) {
            Ok(())
        } else {
            Err(Counterexample::Edges(cert.u1.intersection(&cert.u2)))
        },
    );
    r.check(
        "F is a set of edges of And_k",
        match cert.fset.iter().find(|e| !g.contains_edge(e)) {
            None => Ok(()),
            Some(e) => Err(Counterexample::Edge(*e)),
        },
    );
    r.check(
        "|F| = floor(k^2/4)",
        if cert.fset.len() == f_size(k) {
            Ok(())
        } else {
            Err(Counterexample::Note(format!("|F| = {}", cert.fset.len())))
        },
    );
    match g.remove_edges(&cert.fset, Removal::Lenient) {
        Ok(rest) => r.check(
            "partition properly colours And_k - F",
            match cert.partition.check_proper(&rest) {
                Ok(()) => Ok(()),
                Err(ColoringDefect::Uncovered(v)) => Err(Counterexample::Vertex(v)),
                Err(ColoringDefect::Monochromatic(e)) => Err(Counterexample::Edge(e)),
            },
        ),
        Err(e) => r.fail("partition properly colours And_k - F", Counterexample::Note(e.to_string())),
    }
    let mut missing = None;
    let mut bad = None;
    for e in &cert.fset {
        match cert.witnesses.get(e) {
            None => {
                missing.get_or_insert(*e);
            }
            Some(w) => {
                if bad.is_none() {
                    if let Err(cx) = check_designated(k, e, w)? {
                        bad = Some(cx);
                    }
                }
            }
        }
    }
    r.check(
        "every edge of F has a witness",
        missing.map_or(Ok(()), |e| Err(Counterexample::Edge(e))),
    );
    r.check("designated witnesses validate", bad.map_or(Ok(()), Err));
    Ok(r)
}

/// Which extra certifications `certify` runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    pub strong: bool,
}

/// Full certification of the construction at `k`: structure of `And_k`, the
/// certificate, minimality through the general odd-cycle checker and the
/// inductive identities.
pub fn certify(k: usize, opts: CertifyOptions) -> Result<VerificationReport> {
    certify_edge_set(k, &f(k)?, opts)
}

/// [`certify`] for every k in `ks`, in parallel; results keep the input order.
pub fn certify_range(ks: &[usize], opts: CertifyOptions) -> Result<Vec<(usize, VerificationReport)>> {
    ks.par_iter()
        .map(|&k| certify(k, opts).map(|r| (k, r)))
        .collect()
}

/// As [`certify`], but for an arbitrary candidate edge set in place of `F_k`.
/// The construction-specific claims are still checked against `F_k` itself.
pub fn certify_edge_set(k: usize, fset: &EdgeSet, opts: CertifyOptions) -> Result<VerificationReport> {
    let inst = andrasfai::andrasfai(k)?;
    let mut r = VerificationReport::new();
    r.absorb("structure: ", andrasfai::check_structure(&inst));
    if k >= 3 {
        r.absorb("reduction: ", andrasfai::inductive_reduction(k)?);
    }

    let cert = BipartificationCertificate::build(k)?;
    r.absorb("certificate: ", check_certificate(&cert)?);
    r.absorb("construction: ", construction_identities(k)?);

    r.absorb(
        "minimality: ",
        match verify_minimal_bipartification(&inst.graph, fset, opts.strong) {
            Ok(rep) => rep,
            Err(Error::MissingEdge(e)) => {
                let mut rep = VerificationReport::new();
                rep.fail("edge set lies in And_k", Counterexample::Edge(e));
                rep
            }
            Err(e) => return Err(e),
        },
    );
    Ok(r)
}

/// The set identities behind the induction.
pub fn construction_identities(k: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new();
    let (a, b) = (u1(k)?, u2(k)?);
    r.check(
        "U1 edges avoid multiples of 3, U2 edges contain one",
        match a
            .iter()
            .find(|e| e.u() % 3 == 0 || e.v() % 3 == 0)
            .or_else(|| b.iter().find(|e| e.u() % 3 != 0 && e.v() % 3 != 0))
        {
            None => Ok(()),
            Some(e) => Err(Counterexample::Edge(*e)),
        },
    );
    let g = andrasfai::andrasfai_graph(k)?;
    let mono = partition_ab(k)?.monochromatic_edges(&g);
    let fk = a.union(&b);
    r.check(
        "F is exactly the monochromatic edges of A/B",
        if mono == fk {
            Ok(())
        } else {
            Err(Counterexample::Edges(
                mono.difference(&fk).union(&fk.difference(&mono)),
            ))
        },
    );
    if k >= 3 {
        let (closed, literal) = (delta_f(k)?, delta_f_by_difference(k)?);
        r.check(
            "closed-form F_k \\ F_(k-1) equals the set difference",
            if closed == literal {
                Ok(())
            } else {
                Err(Counterexample::Edges(
                    closed.difference(&literal).union(&literal.difference(&closed)),
                ))
            },
        );
        let cross = a.intersection(&u2(k - 1)?).union(&b.intersection(&u1(k - 1)?));
        r.check(
            "U1_k ∩ U2_(k-1) and U2_k ∩ U1_(k-1) are empty",
            if cross.is_empty() {
                Ok(())
            } else {
                Err(Counterexample::Edges(cross))
            },
        );
    }
    Ok(r)
}

/// For reporting: whether a designated witness still meets the final `F_k`
/// in its edge alone. This is not part of the certification; see the module
/// docs on monotonicity.
pub fn witness_isolated_in_final(k: usize, e: &Edge, w: &DesignatedWitness) -> Result<bool> {
    let hit = w.cycle.edge_set().intersection(&f(k)?);
    Ok(hit.len() == 1 && hit.contains(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_certificate() {
        let c = BipartificationCertificate::build(2).unwrap();
        assert_eq!(c.fset.len(), 1);
        assert_eq!(c.witnesses.len(), 1);
        assert!(check_certificate(&c).unwrap().passed());
    }

    #[test]
    fn k5_certificate_has_six_witnessed_edges() {
        let c = BipartificationCertificate::build(5).unwrap();
        assert_eq!(c.fset.len(), 6);
        assert_eq!(c.witnesses.len(), 6);
        let r = check_certificate(&c).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn k4_top_layer_is_c_type_only() {
        let c = BipartificationCertificate::build(4).unwrap();
        assert_eq!(c.witnesses.len(), 4);
        let top: Vec<_> = c.witnesses.values().filter(|w| w.layer == 4).collect();
        assert_eq!(top.len(), 2);
        assert!(top.iter().all(|w| matches!(w.kind, WitnessKind::C { .. })));
        assert!(check_certificate(&c).unwrap().passed());
    }

    #[test]
    fn layer_assignment_follows_latest_entry() {
        // {0,1} enters at k=3 as a D-type edge and stays through k=5.
        let e01 = Edge::new(0, 1).unwrap();
        let w = designated_witness(4, &e01).unwrap().unwrap();
        assert_eq!((w.layer, w.kind), (3, WitnessKind::D { i: 0 }));
        let w = designated_witness(5, &e01).unwrap().unwrap();
        assert_eq!((w.layer, w.kind), (3, WitnessKind::D { i: 0 }));
        assert_eq!(designated_witness(3, &Edge::new(1, 2).unwrap()).unwrap(), None);
    }

    #[test]
    fn document_round_trip() {
        let c = BipartificationCertificate::build(6).unwrap();
        let json = serde_json::to_string(&c.to_document()).unwrap();
        let back: CertificateDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_certificate().unwrap(), c);
        assert!(json.contains("\"witnesses\":{\"0-1\":"));
    }

    #[test]
    fn corrupted_certificate_fails() {
        let mut c = BipartificationCertificate::build(5).unwrap();
        let e = *c.fset.iter().next().unwrap();
        c.witnesses.remove(&e);
        assert!(!check_certificate(&c).unwrap().passed());
    }

    #[test]
    fn certify_small_k() {
        for k in 2..=8 {
            let r = certify(k, CertifyOptions { strong: true }).unwrap();
            assert!(r.passed(), "k={k}\n{r}");
        }
    }

    #[test]
    fn certify_dropped_edge_names_an_odd_cycle() {
        let mut fset = f(5).unwrap();
        let e = *fset.iter().next().unwrap();
        fset.remove(&e);
        let r = certify_edge_set(5, &fset, CertifyOptions { strong: true }).unwrap();
        assert!(!r.passed());
        let claim = r.claim("minimality: remainder is bipartite").unwrap();
        assert!(matches!(claim.counterexample, Some(Counterexample::Cycle(_))));
    }
}
