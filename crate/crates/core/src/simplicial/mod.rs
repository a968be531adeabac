//! Exact integral (co)homology of finite cell and simplicial complexes.

pub mod cohomology;
pub mod complex;
pub mod maps;
pub mod product;
pub mod quotient;
pub mod reduce;
pub mod simplicial;
pub mod snf;
pub mod subdivide;

pub use cohomology::{Cohomology, CohomologyGroup};
pub use complex::{CellComplex, Cochain, Incidence, RelativeComplex};
pub use maps::CellMap;
pub use product::{cup, ProductComplex};
pub use quotient::{quotient_by_free_action, CellAction, Quotient};
pub use simplicial::{parse_complex, simplicial_product, SimplicialComplex, SimplicialMap};
pub use snf::{column_reduce, smith_normal_form, solve_integer, Matrix, Snf};
pub use subdivide::{barycentric_subdivide, lift_automorphism, subdivide_times, Subdivision};
