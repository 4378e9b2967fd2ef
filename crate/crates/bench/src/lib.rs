//! Shared fixtures for the criterion benches.

use cp2kit_core::constructors;
use cp2kit_core::group::Group;

pub fn alternating_5() -> Group {
    constructors::alternating(5).expect("A5 builds")
}

pub fn symmetric_5() -> Group {
    constructors::symmetric(5).expect("S5 builds")
}

pub fn quaternion_256() -> Group {
    constructors::generalized_quaternion(256).expect("Q256 builds")
}

pub fn frobenius_80() -> Group {
    constructors::frobenius_linear(2, 4, 5).expect("the order-80 Frobenius group builds")
}

pub fn coordinate_shift_243() -> Group {
    constructors::coordinate_shift_extension(3).expect("the order-243 extension builds").group
}
