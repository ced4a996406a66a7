//! Heaps, toric heaps and cyclic reducibility in Coxeter groups.
//!
//! Words are reduced by braid-move search, heaps and toric heaps are built
//! from words, and elements are classified as FC, CFC, TFC or faux CFC.

pub mod bits;
pub mod braid;
pub mod classify;
pub mod coxeter;
pub mod cyclic;
pub mod dot;
pub mod error;
pub mod heap;
pub mod poset;
mod search;
pub mod toric;

pub use braid::{
    braid_orbit, commutativity_class, commutativity_classes, conjugate, elements_up_to, inverse,
    is_reduced, multiply, normal_form, power_length, reduced_words, right_descents, BraidOrbit,
    NormalForm, DEFAULT_ORBIT_CAP,
};
pub use classify::{
    classify, conjecture_probe, coxeter_conjugacy_classes, coxeter_conjugator, coxeter_elements,
    coxeter_to_orientation, cvmt_probe, is_cfc, is_faux_cfc, is_fc, is_tfc, logarithmic_probe,
    odd_braid_obstruction, orientation_to_coxeter, tfc_constructor, ClassificationReport, TfcKind,
};
pub use coxeter::{support, Bond, CoxeterGraph, Gen, GraphSpec, Word};
pub use cyclic::{
    ctor_class, cyclic_decomposition, cyclic_word, is_cyclically_reduced_element,
    is_cyclically_reduced_word, is_torically_reduced, ltor, rtor_cyclic_class, rtor_words,
    toric_heap_of_word, toric_heaps_isomorphic, toric_reduction, torically_equivalent_elements,
    CyclicWord, ToricElement, ToricHeap, ToricReduction,
};
pub use error::{Error, Result};
pub use heap::{heap_of_word, heaps_isomorphic, Heap};
pub use poset::{Poset, DEFAULT_EXTENSION_CAP};
pub use toric::{
    all_acyclic_orientations, flip_path, is_toric_directed_path, toric_class, toric_classes,
    total_toric_order, tutte, AcyclicOrientation, SimpleGraph, ToricPoset, DEFAULT_CLASS_CAP,
};
