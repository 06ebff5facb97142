use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used for expected frequencies and deviations.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn from_count(c: u64) -> Self {
        Self::from_u64(c).expect("count representable as float")
    }
}

impl Real for f32 {}
impl Real for f64 {}
