use std::fmt;
use std::sync::Arc;

use super::cuspidal::{CuspidalThetaRule, ParityThetaRule};
use super::order::{BipartitionDominance, ImageOrder};
use crate::bn::LinearCharacter;

/// Conventions the formulas leave open.
///
/// * `sgn`: which order-two linear character the `sgn` of the Weil
///   formulas denotes (default: the Coxeter sign).
/// * `theta_rule`: the map `k -> k'` on cuspidal unipotent indices.
/// * `order`: the partial order used to pick extremal images.
#[derive(Clone)]
pub struct HoweConfig {
    pub sgn: LinearCharacter,
    pub theta_rule: Arc<dyn CuspidalThetaRule>,
    pub order: Arc<dyn ImageOrder>,
}

impl Default for HoweConfig {
    fn default() -> Self {
        HoweConfig {
            sgn: LinearCharacter::CoxeterSign,
            theta_rule: Arc::new(ParityThetaRule),
            order: Arc::new(BipartitionDominance),
        }
    }
}

impl HoweConfig {
    pub fn with_sgn(mut self, sgn: LinearCharacter) -> Self {
        self.sgn = sgn;
        self
    }

    pub fn with_order(mut self, order: Arc<dyn ImageOrder>) -> Self {
        self.order = order;
        self
    }

    pub fn with_theta_rule(mut self, rule: Arc<dyn CuspidalThetaRule>) -> Self {
        self.theta_rule = rule;
        self
    }
}

impl fmt::Debug for HoweConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HoweConfig")
            .field("sgn", &self.sgn)
            .field("theta_rule", &self.theta_rule)
            .field("order", &self.order.name())
            .finish()
    }
}
