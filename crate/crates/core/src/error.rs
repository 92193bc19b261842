use thiserror::Error;

/// Errors raised by graph construction, verification and the lifting pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(i64),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bipartite (odd cycle through edge {0}-{1})")]
    NotBipartite(usize, usize),
    #[error("THETA_NOT_TRANSITIVE: class {class} differs from the Djokovic cut of edge {u}-{v}")]
    ThetaNotTransitive { class: usize, u: usize, v: usize },
    #[error("HALFSPACE_NOT_CONVEX: class {class}, shortest {from}-{to} path leaves a halfspace")]
    HalfspaceNotConvex { class: usize, from: usize, to: usize },
    #[error("NOT_GATED: side {side}, vertex {vertex} has no gate")]
    NotGated { side: usize, vertex: usize },
    #[error("identification is not an isomorphism of induced subgraphs: {0}")]
    BadIdentification(String),
    #[error("DOMAIN_TOO_LARGE: more than {0} configurations")]
    DomainTooLarge(usize),
    #[error("RESOURCE_LIMIT: {0}")]
    ResourceLimit(String),
    #[error("unknown event {0}")]
    UnknownEvent(usize),
    #[error("event {0} paired with itself")]
    SameEvent(usize),
    #[error("labeling is partial: no label for event {0}")]
    PartialLabeling(usize),
    #[error("coloring is partial: no color for class {0}")]
    PartialColoring(usize),
    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),
    #[error("box {index} is not cell-represented along axis {axis}")]
    NotCellRepresented { index: usize, axis: usize },
    #[error("box {0} lies outside the bounding box")]
    BoxOutsideBounds(usize),
    #[error("degenerate box {0}")]
    DegenerateBox(usize),
    #[error("CONSTRUCTION_BUG: {0}")]
    ConstructionBug(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
