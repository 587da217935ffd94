use std::sync::Arc;

use thiserror::Error;

use crate::exactnum::VecE;
use crate::geometry::GeometryError;
use crate::supervectors::TileParams;

use super::{Attach, DockTarget, LayoutTable, Placement, Prototile, SupertileKind, TileData};

/// Role of a child inside its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    /// The thc-(n-1) child.
    Compound,
    /// Hat piece `1..=6`.
    Hat(u8),
}

#[derive(Debug, Clone)]
pub struct Child {
    pub piece: Piece,
    pub placement: Placement,
    pub node: Arc<SupertileNode>,
}

#[derive(Debug, Clone)]
pub struct SupertileNode {
    kind: SupertileKind,
    generation: u32,
    children: Vec<Child>,
    leaves: Vec<Placement>,
    tail: VecE,
    head: VecE,
    third_slot: Option<Placement>,
    hat_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("generation must be at least 1")]
    ZeroGeneration,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{what} vertex {index} is out of range")]
    Vertex { what: &'static str, index: usize },
    #[error("generation {generation}: meeting rule fails: {detail}")]
    Meeting { generation: u32, detail: String },
}

impl SupertileNode {
    pub fn kind(&self) -> SupertileKind {
        self.kind
    }

    pub fn generation(&self) -> u32 {
        self.generation
    }

    /// Children in construction order; empty for generation 1.
    pub fn children(&self) -> &[Child] {
        &self.children
    }

    /// Single hats of a generation-1 node; empty otherwise.
    pub fn leaves(&self) -> &[Placement] {
        &self.leaves
    }

    pub fn child(&self, piece: Piece) -> Option<&Child> {
        self.children.iter().find(|c| c.piece == piece)
    }

    pub fn tail(&self) -> &VecE {
        &self.tail
    }

    pub fn head(&self) -> &VecE {
        &self.head
    }

    pub fn anchors(&self) -> (&VecE, &VecE) {
        (&self.tail, &self.head)
    }

    /// Where the absent third hat piece of a thc would go.
    pub fn third_slot(&self) -> Option<&Placement> {
        self.third_slot.as_ref()
    }

    /// Number of single hats, saturating at `u64::MAX`.
    pub fn hat_count(&self) -> u64 {
        self.hat_count
    }

    pub fn hats(&self) -> HatIter<'_> {
        HatIter::with_root(self, Placement::identity())
    }
}

/// Depth-first stream of absolute single-hat placements.
pub struct HatIter<'a> {
    stack: Vec<Frame<'a>>,
}

struct Frame<'a> {
    node: &'a SupertileNode,
    at: Placement,
    next: usize,
}

impl<'a> HatIter<'a> {
    pub fn with_root(node: &'a SupertileNode, root: Placement) -> Self {
        HatIter {
            stack: vec![Frame {
                node,
                at: root,
                next: 0,
            }],
        }
    }
}

impl Iterator for HatIter<'_> {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        loop {
            let top = self.stack.last_mut()?;
            let node = top.node;
            if node.generation == 1 {
                if let Some(q) = node.leaves.get(top.next) {
                    top.next += 1;
                    return Some(top.at.compose(q));
                }
            } else if let Some(ch) = node.children.get(top.next) {
                top.next += 1;
                let at = top.at.compose(&ch.placement);
                self.stack.push(Frame {
                    node: &ch.node,
                    at,
                    next: 0,
                });
                continue;
            }
            self.stack.pop();
        }
    }
}

/// All single hats with their mirror flag.
pub fn expand(node: &SupertileNode) -> Vec<(Placement, bool)> {
    node.hats()
        .map(|q| {
            let r = q.reflected();
            (q, r)
        })
        .collect()
}

/// Head minus tail, both taken from the constructed geometry.
pub fn measured_supervector(node: &SupertileNode) -> VecE {
    &node.head - &node.tail
}

pub fn build(
    kind: SupertileKind,
    n: u32,
    p: &TileParams,
    tile: &TileData,
    layout: &LayoutTable,
) -> Result<Arc<SupertileNode>, BuildError> {
    let levels = build_levels(n, p, tile, layout)?;
    let (hat, thc) = levels.into_iter().last().expect("n >= 1 gives one level");
    Ok(match kind {
        SupertileKind::Hat => hat,
        SupertileKind::Thc => thc,
    })
}

/// The hat and thc supertiles of one generation.
pub type Level = (Arc<SupertileNode>, Arc<SupertileNode>);

/// `(hat-k, thc-k)` for `k = 1..=n`.
pub fn build_levels(
    n: u32,
    p: &TileParams,
    tile: &TileData,
    layout: &LayoutTable,
) -> Result<Vec<Level>, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroGeneration);
    }
    let proto = tile.instantiate(p)?;
    let mut levels = vec![first_generation(&proto)];
    for g in 2..=n {
        let next = next_generation(g, &levels, &proto, p, layout)?;
        levels.push(next);
    }
    Ok(levels)
}

fn first_generation(proto: &Prototile) -> (Arc<SupertileNode>, Arc<SupertileNode>) {
    let leaf = |kind, leaves: Vec<Placement>| {
        Arc::new(SupertileNode {
            kind,
            generation: 1,
            children: Vec::new(),
            hat_count: leaves.len() as u64,
            leaves,
            tail: proto.tail.clone(),
            head: proto.head.clone(),
            third_slot: None,
        })
    };
    (
        leaf(SupertileKind::Hat, vec![Placement::identity()]),
        leaf(
            SupertileKind::Thc,
            vec![Placement::identity(), proto.partner.clone()],
        ),
    )
}

/// Rotation by `k` followed by the translation taking `local` onto `target`.
fn anchored(k: i32, local: &VecE, target: &VecE) -> Placement {
    let lin = Placement::rotation(k);
    Placement::new(k, false, target - &lin.apply(local))
}

fn next_generation(
    g: u32,
    levels: &[(Arc<SupertileNode>, Arc<SupertileNode>)],
    proto: &Prototile,
    p: &TileParams,
    layout: &LayoutTable,
) -> Result<(Arc<SupertileNode>, Arc<SupertileNode>), BuildError> {
    let (sb, sc) = &levels[g as usize - 2];
    let rot = layout.absolute_rotations();
    let vertex = |what: &'static str, i: usize| -> Result<&VecE, BuildError> {
        proto.vertex(i).ok_or(BuildError::Vertex { what, index: i })
    };

    let mut q: Vec<Placement> = vec![Placement::rotation(rot[0])];
    for rule in layout.pieces() {
        let k = rot[rule.index as usize];
        let placed = match rule.attach {
            Attach::SharedTail => anchored(k, &sb.tail, &q[0].apply(&sc.tail)),
            Attach::Chain => {
                let prev = &q[rule.index as usize - 1];
                anchored(k, &sb.tail, &prev.apply(&sb.head))
            }
            Attach::Meeting if g == 2 => {
                let dock = layout.second_dock();
                let at = vertex("dock", dock.vertex)?;
                let target = match dock.target {
                    DockTarget::CompoundHat => q[0].apply(at),
                    DockTarget::CompoundPartner => q[0].compose(&proto.partner).apply(at),
                    DockTarget::Piece(t) => q[t as usize].apply(at),
                };
                let target = &target + &dock.shift.at(p);
                anchored(k, vertex("dock", dock.own_vertex)?, &target)
            }
            Attach::Meeting => meeting(g, k, &q[0], levels)?,
        };
        q.push(placed);
    }

    let anchor = if g == 2 {
        vertex("anchor", layout.second_anchor_vertex())?.clone()
    } else {
        let (ss, _) = &levels[g as usize - 3];
        let third = sb
            .child(Piece::Hat(3))
            .expect("hat supertiles have a third piece");
        third.placement.apply(&ss.head)
    };
    let tail = q[1].apply(&anchor);
    let head = q[5].apply(&anchor);

    let make = |kind: SupertileKind| {
        let mut children = vec![Child {
            piece: Piece::Compound,
            placement: q[0].clone(),
            node: sc.clone(),
        }];
        for i in 1..=6u8 {
            if kind == SupertileKind::Thc && i == 3 {
                continue;
            }
            children.push(Child {
                piece: Piece::Hat(i),
                placement: q[i as usize].clone(),
                node: sb.clone(),
            });
        }
        let hat_count = children
            .iter()
            .fold(0u64, |acc, c| acc.saturating_add(c.node.hat_count));
        Arc::new(SupertileNode {
            kind,
            generation: g,
            children,
            leaves: Vec::new(),
            tail: tail.clone(),
            head: head.clone(),
            third_slot: (kind == SupertileKind::Thc).then(|| q[3].clone()),
            hat_count,
        })
    };
    Ok((make(SupertileKind::Hat), make(SupertileKind::Thc)))
}

/// Places the fourth piece so that the compound inside it fills the
/// missing-third slot of the compound child.
fn meeting(
    g: u32,
    k: i32,
    q0: &Placement,
    levels: &[(Arc<SupertileNode>, Arc<SupertileNode>)],
) -> Result<Placement, BuildError> {
    let (sb, sc) = &levels[g as usize - 2];
    let (ss, ssc) = &levels[g as usize - 3];
    let fail = |detail: String| BuildError::Meeting {
        generation: g,
        detail,
    };
    let inner = &sb
        .child(Piece::Compound)
        .expect("hat supertiles have a compound child")
        .placement;
    let slot = q0.compose(
        sc.third_slot()
            .expect("thc supertiles record the third slot"),
    );
    let target_tail = slot.apply(&ss.tail);
    let placed = anchored(k, &inner.apply(&ssc.tail), &target_tail);

    let docked = placed.compose(inner);
    if docked.rotation_k() != slot.rotation_k() || docked.reflected() != slot.reflected() {
        return Err(fail(format!(
            "docked compound has rotation {} but the slot has rotation {}",
            docked.rotation_k(),
            slot.rotation_k()
        )));
    }
    let got = docked.apply(&ssc.head);
    let want = slot.apply(&ss.head);
    if got != want {
        return Err(fail(format!(
            "docked compound head {got} differs from slot head {want}"
        )));
    }
    Ok(placed)
}
