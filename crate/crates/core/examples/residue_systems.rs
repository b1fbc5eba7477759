//! Covering function, multiplicity, essential classes and the dual system.

use covsum::residue::{split_class_generator, AugmentedSystem, CoverSystem};

fn main() -> covsum::Result<()> {
    // Erdős's cover: 0(2), 0(3), 1(4), 5(6), 7(12).
    let erdos = CoverSystem::from_pairs(&[(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])?;
    println!("N_A = {}", erdos.period());
    println!("w_A over one period: {:?}", erdos.coverage_table());
    let m = erdos.covering_multiplicity();
    println!("m(A) = {m}, essential = {:?}", erdos.essential_classes(m)?);

    let halves = CoverSystem::from_pairs(&[(0, 2), (1, 2)])?;
    let dual = halves.dual_system();
    println!("dual of {:?} is {:?}", halves.classes(), dual.classes());
    assert!(halves.is_m_system(1) && dual.is_m_cover(1));

    // Refining a class keeps the covering function intact.
    let three = CoverSystem::from_pairs(&[(0, 1); 3])?;
    let refined = split_class_generator(&three, 7, 6)?;
    println!("refined 3-cover with {} classes: {:?}", refined.len(), refined.classes());
    assert!(refined.is_m_cover(3));

    // Keep a distinguished class apart from the rest.
    let aug = AugmentedSystem::new(erdos.classes()[0], erdos.without(0));
    println!("a_0 = {}, tail classes through a_0: {:?}", aug.a0, aug.tail_indices_containing_a0());
    Ok(())
}
