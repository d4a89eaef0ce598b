//! Graph families: power graphs of finite groups, zero-divisor style graphs
//! of finite commutative rings, the comaximal ideal graph, and a handful of
//! standard parametric graphs.

use thiserror::Error;

use crate::algebra::{
    all_ideals, describe_ideal, ideal_generated, is_comaximal, jacobson_radical, maximal_ideals,
    parse_group_spec, parse_ring_spec, AlgebraError, FiniteGroup, FiniteRing, Ideal,
};
use crate::graph::{generalized_composition, CompositionSpec, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown family spec {0:?}")]
    UnknownFamily(String),
}

/// What a vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexOrigin {
    GroupElement(usize),
    RingElement(usize),
    Ideal(Ideal),
    Plain(usize),
}

/// A generated graph whose vertices carry unique labels and a pointer back to
/// the algebraic object they came from.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub origins: Vec<VertexOrigin>,
    /// Set when the construction produced a degenerate (empty) graph.
    pub warning: Option<String>,
}

impl LabeledGraph {
    fn new(graph: Graph, labels: Vec<String>, origins: Vec<VertexOrigin>) -> Self {
        debug_assert_eq!(labels.len(), origins.len());
        let graph = graph
            .with_labels(labels)
            .expect("one label per generated vertex");
        LabeledGraph {
            graph,
            origins,
            warning: None,
        }
    }

    fn plain(graph: Graph) -> Self {
        let origins = (0..graph.n()).map(VertexOrigin::Plain).collect();
        LabeledGraph {
            graph,
            origins,
            warning: None,
        }
    }
}

/// Power graph: `a ~ b` (a ≠ b) iff `a ∈ <b>` or `b ∈ <a>`.
pub fn power_graph(g: &FiniteGroup) -> LabeledGraph {
    let n = g.order();
    let mut member = vec![false; n * n];
    for a in 0..n {
        for x in g.cyclic_subgroup(a).expect("valid element") {
            member[a * n + x] = true;
        }
    }
    let graph = Graph::from_predicate(n, |a, b| member[a * n + b] || member[b * n + a]);
    LabeledGraph::new(
        graph,
        g.labels().to_vec(),
        (0..n).map(VertexOrigin::GroupElement).collect(),
    )
}

/// One class of the divisor partition of the power graph of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub divisor: usize,
    pub members: Vec<usize>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// For every proper divisor `d` of `n`, the residues `x` with `gcd(x, n) = d`;
/// zero joins the class of `d = 1`. Class sizes are `φ(n/d)`, and `φ(n) + 1`
/// for `d = 1`.
pub fn power_graph_zn_classes(n: usize) -> Result<Vec<DivisorClass>, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::BadParameter(
            "divisor classes need n >= 2".into(),
        ));
    }
    let mut classes: Vec<DivisorClass> = (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|divisor| DivisorClass {
            divisor,
            members: Vec::new(),
        })
        .collect();
    classes[0].members.push(0);
    for x in 1..n {
        let d = gcd(x, n);
        let slot = classes
            .iter_mut()
            .find(|c| c.divisor == d)
            .expect("gcd of a non-zero residue is a proper divisor");
        slot.members.push(x);
    }
    Ok(classes)
}

/// `Γ(R)`: non-zero zero divisors, `x ~ y` iff `xy = 0`. Rings without zero
/// divisors give an empty graph with a warning.
pub fn zero_divisor_graph(r: &FiniteRing) -> LabeledGraph {
    let zero = r.zero();
    let vertices: Vec<usize> = (0..r.size())
        .filter(|&x| x != zero && (0..r.size()).any(|y| y != zero && r.mul(x, y) == zero))
        .collect();
    let graph = Graph::from_predicate(vertices.len(), |i, j| {
        r.mul(vertices[i], vertices[j]) == zero
    });
    let mut out = LabeledGraph::new(
        graph,
        vertices.iter().map(|&x| r.label(x).to_string()).collect(),
        vertices
            .iter()
            .map(|&x| VertexOrigin::RingElement(x))
            .collect(),
    );
    if vertices.is_empty() {
        out.warning = Some(format!("{} has no non-zero zero divisors", r.name()));
    }
    out
}

/// `Γ_I(R)`: elements `x ∉ I` with `xy ∈ I` for some `y ∉ I`; `x ~ y` iff
/// `xy ∈ I`.
pub fn ideal_zero_divisor_graph(
    r: &FiniteRing,
    ideal: &Ideal,
) -> Result<LabeledGraph, GeneratorError> {
    if !ideal.is_proper(r) {
        return Err(AlgebraError::ImproperIdeal.into());
    }
    let outside: Vec<usize> = (0..r.size()).filter(|&x| !ideal.contains(x)).collect();
    let vertices: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| ideal.contains(r.mul(x, y))))
        .collect();
    let graph = Graph::from_predicate(vertices.len(), |i, j| {
        ideal.contains(r.mul(vertices[i], vertices[j]))
    });
    let mut out = LabeledGraph::new(
        graph,
        vertices.iter().map(|&x| r.label(x).to_string()).collect(),
        vertices
            .iter()
            .map(|&x| VertexOrigin::RingElement(x))
            .collect(),
    );
    if vertices.is_empty() {
        out.warning = Some(format!(
            "ideal-based zero-divisor graph of {} is empty",
            r.name()
        ));
    }
    Ok(out)
}

/// Comaximal ideal graph: proper ideals outside the Jacobson radical,
/// `I ~ J` iff `I + J = R`. Vertices follow the (size, elements) ideal order.
pub fn comaximal_ideal_graph(r: &FiniteRing) -> Result<LabeledGraph, GeneratorError> {
    if maximal_ideals(r)?.len() < 2 {
        return Err(AlgebraError::LocalRingUnsupported.into());
    }
    let radical = jacobson_radical(r)?;
    let vertices: Vec<Ideal> = all_ideals(r)?
        .into_iter()
        .filter(|i| i.is_proper(r) && !i.is_subset_of(&radical))
        .collect();
    let mut adjacent = vec![false; vertices.len() * vertices.len()];
    for (a, i) in vertices.iter().enumerate() {
        for (b, j) in vertices.iter().enumerate().skip(a + 1) {
            adjacent[a * vertices.len() + b] = is_comaximal(r, i, j)?;
        }
    }
    let graph = Graph::from_predicate(vertices.len(), |a, b| adjacent[a * vertices.len() + b]);
    let labels = vertices.iter().map(|i| describe_ideal(r, i)).collect();
    Ok(LabeledGraph::new(
        graph,
        labels,
        vertices.into_iter().map(VertexOrigin::Ideal).collect(),
    ))
}

/// Standard parametric families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardFamily {
    CompleteMultipartite(Vec<usize>),
    /// Rim of `n` vertices plus a hub, `n + 1` vertices in total.
    Wheel(usize),
    /// `K_{1, n-1}` on `n` vertices.
    Star(usize),
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
}

fn cycle_graph(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::BadParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn standard_family(family: &StandardFamily) -> Result<Graph, GeneratorError> {
    match family {
        StandardFamily::CompleteMultipartite(parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(GeneratorError::BadParameter(
                    "multipartite parts must be non-empty and positive".into(),
                ));
            }
            let factors = parts.iter().map(|&p| Graph::empty(p)).collect();
            let spec = CompositionSpec::new(Graph::complete(parts.len()), factors)?;
            Ok(generalized_composition(&spec)?)
        }
        StandardFamily::Wheel(n) => {
            if *n < 3 {
                return Err(GeneratorError::BadParameter("wheel needs n >= 3".into()));
            }
            let spec =
                CompositionSpec::new(Graph::complete(2), vec![cycle_graph(*n)?, Graph::empty(1)])?;
            Ok(generalized_composition(&spec)?)
        }
        StandardFamily::Star(n) => {
            if *n < 2 {
                return Err(GeneratorError::BadParameter("star needs n >= 2".into()));
            }
            standard_family(&StandardFamily::CompleteMultipartite(vec![1, n - 1]))
        }
        StandardFamily::Complete(n) => Ok(Graph::complete(*n)),
        StandardFamily::Empty(n) => Ok(Graph::empty(*n)),
        StandardFamily::Path(n) => {
            let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
            Ok(Graph::new(*n, &edges)?)
        }
        StandardFamily::Cycle(n) => cycle_graph(*n),
    }
}

fn parse_count(text: &str, what: &str) -> Result<usize, GeneratorError> {
    text.trim().parse().map_err(|_| {
        GeneratorError::BadParameter(format!("{what}: expected a count, got {text:?}"))
    })
}

/// Splits `"(a,(b,c),d)"` into top-level comma separated items.
fn parse_generators(r: &FiniteRing, text: &str) -> Result<Vec<usize>, GeneratorError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| {
            GeneratorError::BadParameter(format!(
                "ideal generators must be parenthesised: {text:?}"
            ))
        })?;
    let mut items = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                items.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&inner[start..]);
    items
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|label| {
            let compact: String = label.chars().filter(|c| !c.is_whitespace()).collect();
            r.index_of(&compact).ok_or_else(|| {
                GeneratorError::BadParameter(format!("{label:?} is not an element of {}", r.name()))
            })
        })
        .collect()
}

/// Builds a graph from a family spec such as `power:D12`, `zdg:Z24`,
/// `izdg:Z24:I=(8)`, `comax:Z2xZ2xZ4`, `multipartite:3,3,3`, `wheel:5`,
/// `star:7`, `complete:4`, `empty:3`, `path:5` or `cycle:6`.
pub fn family_from_spec(spec: &str) -> Result<LabeledGraph, GeneratorError> {
    let mut parts = spec.trim().splitn(3, ':');
    let kind = parts.next().unwrap_or_default();
    let arg = parts
        .next()
        .ok_or_else(|| GeneratorError::UnknownFamily(spec.to_string()))?;
    let extra = parts.next();
    if extra.is_some() && kind != "izdg" {
        return Err(GeneratorError::UnknownFamily(spec.to_string()));
    }
    let graph = match kind {
        "power" => return Ok(power_graph(&parse_group_spec(arg)?)),
        "zdg" => return Ok(zero_divisor_graph(&parse_ring_spec(arg)?)),
        "izdg" => {
            let r = parse_ring_spec(arg)?;
            let gens = match extra {
                Some(text) => {
                    let text = text.trim();
                    let text = text.strip_prefix("I=").unwrap_or(text);
                    parse_generators(&r, text)?
                }
                None => Vec::new(),
            };
            let ideal = ideal_generated(&r, &gens)?;
            return ideal_zero_divisor_graph(&r, &ideal);
        }
        "comax" => return comaximal_ideal_graph(&parse_ring_spec(arg)?),
        "multipartite" => {
            let sizes = arg
                .split(',')
                .map(|s| parse_count(s, "multipartite"))
                .collect::<Result<Vec<_>, _>>()?;
            standard_family(&StandardFamily::CompleteMultipartite(sizes))?
        }
        "wheel" => standard_family(&StandardFamily::Wheel(parse_count(arg, kind)?))?,
        "star" => standard_family(&StandardFamily::Star(parse_count(arg, kind)?))?,
        "complete" => standard_family(&StandardFamily::Complete(parse_count(arg, kind)?))?,
        "empty" => standard_family(&StandardFamily::Empty(parse_count(arg, kind)?))?,
        "path" => standard_family(&StandardFamily::Path(parse_count(arg, kind)?))?,
        "cycle" => standard_family(&StandardFamily::Cycle(parse_count(arg, kind)?))?,
        _ => return Err(GeneratorError::UnknownFamily(spec.to_string())),
    };
    Ok(LabeledGraph::plain(graph))
}

/// Part sizes when `spec` names a complete multipartite graph (stars
/// included), for the closed-form index.
pub fn multipartite_parts(spec: &str) -> Option<Vec<usize>> {
    let (kind, arg) = spec.trim().split_once(':')?;
    match kind {
        "multipartite" => arg.split(',').map(|s| s.trim().parse().ok()).collect(),
        "star" => {
            let n: usize = arg.trim().parse().ok()?;
            (n >= 2).then(|| vec![1, n - 1])
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twins::{twin_partition, ClassKind};

    fn labels_of(g: &LabeledGraph, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| g.graph.label(v).into_owned()).collect()
    }

    #[test]
    fn power_graph_of_z6() {
        let g = power_graph(&FiniteGroup::cyclic(6).unwrap());
        assert_eq!(g.graph.edge_count(), 13);
        assert_eq!(g.graph.neighbors(2).unwrap(), &[0, 1, 4, 5]);
        assert_eq!(g.graph.neighbors(3).unwrap(), &[0, 1, 5]);
        assert!(!g.graph.has_edge(2, 3));
    }

    #[test]
    fn power_graph_of_q8() {
        let g = power_graph(&FiniteGroup::quaternion8().unwrap());
        let d = twin_partition(&g.graph);
        let classes: Vec<Vec<String>> = d.classes().iter().map(|c| labels_of(&g, c)).collect();
        assert_eq!(
            classes,
            vec![
                vec!["1", "a2"],
                vec!["a", "a3"],
                vec!["b", "a2b"],
                vec!["ab", "a3b"]
            ]
        );
        assert!(d.kinds().iter().all(|&k| k == ClassKind::Complete));
    }

    #[test]
    fn power_graph_of_elementary_abelian_is_star() {
        for k in 1..=4 {
            let g = power_graph(&FiniteGroup::elementary_abelian_2(k).unwrap());
            let n = 1 << k;
            let star = standard_family(&StandardFamily::Star(n)).unwrap();
            assert!(g.graph.same_edges(&star));
        }
    }

    #[test]
    fn divisor_classes() {
        let classes = power_graph_zn_classes(6).unwrap();
        assert_eq!(
            classes,
            vec![
                DivisorClass {
                    divisor: 1,
                    members: vec![0, 1, 5]
                },
                DivisorClass {
                    divisor: 2,
                    members: vec![2, 4]
                },
                DivisorClass {
                    divisor: 3,
                    members: vec![3]
                },
            ]
        );
        let classes = power_graph_zn_classes(4).unwrap();
        assert_eq!(classes[0].members, vec![0, 1, 3]);
        assert_eq!(classes[1].members, vec![2]);
        let prime = power_graph_zn_classes(7).unwrap();
        assert_eq!(prime.len(), 1);
        assert_eq!(prime[0].members.len(), 7);
        assert!(power_graph_zn_classes(1).is_err());
    }

    #[test]
    fn zero_divisor_graphs() {
        let g = zero_divisor_graph(&FiniteRing::zmod(6).unwrap());
        assert_eq!(labels_of(&g, &[0, 1, 2]), vec!["2", "3", "4"]);
        assert_eq!(g.graph.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.warning.is_none());

        let field = zero_divisor_graph(&FiniteRing::zmod(7).unwrap());
        assert_eq!(field.graph.n(), 0);
        assert!(field.warning.is_some());

        let z2z2 = parse_ring_spec("Z2xZ2").unwrap();
        let g = zero_divisor_graph(&z2z2);
        assert_eq!(labels_of(&g, &[0, 1]), vec!["(0,1)", "(1,0)"]);
        assert_eq!(g.graph.edge_count(), 1);
    }

    #[test]
    fn ideal_based_graphs() {
        let z24 = FiniteRing::zmod(24).unwrap();
        let i = ideal_generated(&z24, &[8]).unwrap();
        let g = ideal_zero_divisor_graph(&z24, &i).unwrap();
        let all: Vec<usize> = (0..g.graph.n()).collect();
        assert_eq!(
            labels_of(&g, &all),
            vec!["2", "4", "6", "10", "12", "14", "18", "20", "22"]
        );
        let d = twin_partition(&g.graph);
        let mut shape: Vec<(usize, ClassKind)> = d
            .classes()
            .iter()
            .zip(d.kinds())
            .map(|(c, &k)| (c.len(), k))
            .collect();
        shape.sort_by_key(|s| s.0);
        assert_eq!(shape, vec![(3, ClassKind::Complete), (6, ClassKind::Empty)]);

        let zero = ideal_generated(&z24, &[]).unwrap();
        let via_ideal = ideal_zero_divisor_graph(&z24, &zero).unwrap();
        let plain = zero_divisor_graph(&z24);
        assert_eq!(via_ideal.graph, plain.graph);

        let whole = ideal_generated(&z24, &[1]).unwrap();
        assert!(matches!(
            ideal_zero_divisor_graph(&z24, &whole),
            Err(GeneratorError::Algebra(AlgebraError::ImproperIdeal))
        ));
    }

    #[test]
    fn ideal_based_graph_is_complete_bipartite() {
        let g = family_from_spec("izdg:Z6xZ2:I=((0,1))").unwrap();
        assert_eq!(g.graph.n(), 6);
        let d = twin_partition(&g.graph);
        assert_eq!(d.num_classes(), 2);
        assert!(d.kinds().iter().all(|&k| k == ClassKind::Empty));
        assert_eq!(g.graph.edge_count(), 8);
    }

    #[test]
    fn comaximal_graphs() {
        let r = parse_ring_spec("Z2xZ2xZ4").unwrap();
        let g = comaximal_ideal_graph(&r).unwrap();
        assert_eq!(g.graph.n(), 9);
        let mut sizes = twin_partition(&g.graph).class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2, 2]);

        let g = comaximal_ideal_graph(&parse_ring_spec("Z8xZ9").unwrap()).unwrap();
        assert_eq!(g.graph.n(), 5);
        let d = twin_partition(&g.graph);
        let mut sizes = d.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(d.reduced().edges(), vec![(0, 1)]);

        let g = comaximal_ideal_graph(&FiniteRing::zmod(6).unwrap()).unwrap();
        assert_eq!(labels_of(&g, &[0, 1]), vec!["(3)", "(2)"]);
        assert_eq!(g.graph.edge_count(), 1);

        assert!(matches!(
            comaximal_ideal_graph(&FiniteRing::zmod(8).unwrap()),
            Err(GeneratorError::Algebra(AlgebraError::LocalRingUnsupported))
        ));
    }

    #[test]
    fn standard_families() {
        let k333 = standard_family(&StandardFamily::CompleteMultipartite(vec![3, 3, 3])).unwrap();
        assert_eq!(k333.edge_count(), 27);
        let w5 = standard_family(&StandardFamily::Wheel(5)).unwrap();
        assert_eq!((w5.n(), w5.edge_count()), (6, 10));
        let s7 = standard_family(&StandardFamily::Star(7)).unwrap();
        assert_eq!(s7.degree(0), 6);
        assert_eq!(s7.edge_count(), 6);
        assert!(standard_family(&StandardFamily::Cycle(2)).is_err());
        assert!(standard_family(&StandardFamily::Wheel(2)).is_err());
        assert_eq!(
            standard_family(&StandardFamily::Path(4))
                .unwrap()
                .edge_count(),
            3
        );
    }

    #[test]
    fn family_specs() {
        assert_eq!(family_from_spec("power:D12").unwrap().graph.n(), 12);
        assert_eq!(family_from_spec("zdg:Z24").unwrap().graph.n(), 15);
        assert_eq!(family_from_spec("izdg:Z24:I=(8)").unwrap().graph.n(), 9);
        assert_eq!(family_from_spec("comax:Z2xZ2xZ4").unwrap().graph.n(), 9);
        assert_eq!(
            family_from_spec("multipartite:3,3,3")
                .unwrap()
                .graph
                .edge_count(),
            27
        );
        assert_eq!(family_from_spec("wheel:5").unwrap().graph.n(), 6);
        assert!(matches!(
            family_from_spec("bogus:1"),
            Err(GeneratorError::UnknownFamily(_))
        ));
        assert!(family_from_spec("power").is_err());
        assert!(family_from_spec("izdg:Z24:I=(25)").is_err());
        assert_eq!(multipartite_parts("star:7"), Some(vec![1, 6]));
        assert_eq!(multipartite_parts("multipartite:2,3"), Some(vec![2, 3]));
        assert_eq!(multipartite_parts("wheel:5"), None);
    }
}
