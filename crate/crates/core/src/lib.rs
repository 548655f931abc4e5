pub mod fieldlinalg;
