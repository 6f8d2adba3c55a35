//! Model checking and validity checking for strategic logics with rational
//! capabilities over concurrent game structures with short-sighted
//! preferences.

pub mod gen;
pub mod logic;
pub mod mc;
pub mod model;
pub mod stateset;
pub mod validity;

pub use logic::{parse_formula, Coalition, Formula, LogicError, Modality, StandardDisjunction};
pub use model::{AgentId, ActionId, Cgs, CgsBuilder, Cgsp, JointAction, ModelError, StateId};
pub use stateset::StateSet;
