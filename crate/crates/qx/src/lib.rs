pub mod cli;
pub mod identities;
pub mod matrix_algebra;
pub mod ncalg;
pub mod pfaffian;
pub mod scalars;
pub mod sklyanin;
pub mod tensorops;
