use super::{enumerate_circuits, Graph, VertexId};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn param(name: &str, params: &[usize], idx: usize, default: Option<usize>, min: usize) -> Result<usize> {
    let v = params
        .get(idx)
        .copied()
        .or(default)
        .ok_or_else(|| Error::BadParams(format!("`{name}` needs parameter #{}", idx + 1)))?;
    if v < min {
        return Err(Error::BadParams(format!("`{name}` needs a parameter of at least {min}, got {v}")));
    }
    Ok(v)
}

/// Named graph catalog. Vertices are the integers `1..=n`.
///
/// | name            | params     | graph                                        |
/// |-----------------|------------|----------------------------------------------|
/// | `cycle`         | `n ≥ 3`    | Cₙ                                           |
/// | `complete`      | `n ≥ 1`    | Kₙ                                           |
/// | `wheel`         | `n ≥ 3`    | Wₙ: an n-cycle rim plus a hub (n + 1 vertices) |
/// | `prism`         | `[n ≥ 3]`  | two n-cycles joined by a perfect matching (default n = 3) |
/// | `path`          | `n ≥ 1`    | path on n vertices                           |
/// | `star`          | `k ≥ 1`    | K₁,ₖ                                         |
/// | `bowtie`        |            | two triangles sharing vertex 3               |
/// | `petersen`      |            | the Petersen graph                           |
/// | `k4-subdivided` |            | K₄ with edge 1-2 subdivided by vertex 5      |
pub fn generate_named(name: &str, params: &[usize]) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let n = match name {
        "cycle" => {
            let n = param(name, params, 0, None, 3)?;
            pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        "complete" => {
            let n = param(name, params, 0, None, 1)?;
            pairs.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
            n
        }
        "wheel" => {
            let n = param(name, params, 0, None, 3)?;
            pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
            pairs.extend((0..n).map(|i| (i, n)));
            n + 1
        }
        "prism" => {
            let n = param(name, params, 0, Some(3), 3)?;
            pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
            pairs.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
            pairs.extend((0..n).map(|i| (i, n + i)));
            2 * n
        }
        "path" => {
            let n = param(name, params, 0, None, 1)?;
            pairs.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        "star" => {
            let k = param(name, params, 0, None, 1)?;
            pairs.extend((1..=k).map(|i| (0, i)));
            k + 1
        }
        "bowtie" => {
            pairs.extend([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
            5
        }
        "petersen" => {
            pairs.extend((0..5).map(|i| (i, (i + 1) % 5)));
            pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            pairs.extend((0..5).map(|i| (i, 5 + i)));
            10
        }
        "k4-subdivided" => {
            pairs.extend([(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
            5
        }
        _ => return Err(Error::UnknownName(name.to_owned())),
    };
    Ok(Graph::from_index_pairs(n, &pairs))
}

/// A finite piece of the layered path-and-tree family together with its
/// edge labelling in `{1, 2, 3}`.
#[derive(Debug, Clone)]
pub struct ConstructionWindow {
    pub graph: Graph,
    /// Label of each edge, indexed by edge id.
    pub labels: Vec<u8>,
}

/// Builds `depth` layers of connecting trees between `depth + 1` paths.
///
/// Path `Pᵢ` carries label `ℓᵢ = ((i − 1) mod 3) + 1`. Every vertex `x` of
/// `Pᵢ` roots its own tree: an edge `x–h` to a hub, and for each of its
/// `n − 1` private targets `s` on `Pᵢ₊₁` a spoke `h–m–s`. The root edge and
/// `h–m` carry the third label (neither `ℓᵢ` nor `ℓᵢ₊₁`), `m–s` carries
/// `ℓᵢ`. With these labels the union of any two label classes is a forest,
/// so every circuit sees all three labels; the self-test re-checks this by
/// enumerating circuits and fails loudly otherwise.
pub fn generate_construction_window(n: usize, depth: usize, limits: &Limits) -> Result<ConstructionWindow> {
    if n < 3 {
        return Err(Error::BadParams(format!("window needs n >= 3, got {n}")));
    }
    if depth < 1 {
        return Err(Error::BadParams("window needs depth >= 1".into()));
    }
    let mut ids: Vec<VertexId> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<u8> = Vec::new();
    let add_vertex = |ids: &mut Vec<VertexId>, name: String| {
        ids.push(VertexId::Str(name));
        ids.len() - 1
    };
    let path_label = |layer: usize| ((layer - 1) % 3 + 1) as u8;

    let mut layer: Vec<usize> = (0..n).map(|j| add_vertex(&mut ids, format!("p1.{j}"))).collect();
    for i in 1..=depth + 1 {
        let own = path_label(i);
        for w in layer.windows(2) {
            pairs.push((w[0], w[1]));
            labels.push(own);
        }
        if i == depth + 1 {
            break;
        }
        let third = 6 - own - path_label(i + 1);
        let mut next = Vec::with_capacity(layer.len() * (n - 1));
        for (j, &x) in layer.clone().iter().enumerate() {
            let hub = add_vertex(&mut ids, format!("h{i}.{j}"));
            pairs.push((x, hub));
            labels.push(third);
            for k in 0..n - 1 {
                let mid = add_vertex(&mut ids, format!("m{i}.{j}.{k}"));
                let target = add_vertex(&mut ids, format!("p{}.{}", i + 1, next.len()));
                pairs.push((hub, mid));
                labels.push(third);
                pairs.push((mid, target));
                labels.push(own);
                next.push(target);
            }
        }
        layer = next;
    }

    let graph = Graph::build(
        ids.clone(),
        pairs.iter().map(|&(u, v)| (ids[u].clone(), ids[v].clone())),
    )?;
    for c in enumerate_circuits(&graph, limits)? {
        let mut seen = [false; 3];
        for e in c.iter() {
            seen[labels[e] as usize - 1] = true;
        }
        if seen.contains(&false) {
            return Err(Error::SelfTestFailed(c.to_vec()));
        }
    }
    Ok(ConstructionWindow { graph, labels })
}
