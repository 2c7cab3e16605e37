//! Construction and classification of 3-generated axial algebras of Monster
//! type whose 2-generated subalgebras are all of type 2A, 2B, 3A, 3C, 4A or 4B.

pub mod catalog;
pub mod engine;
pub mod fpgrp;
pub mod golden;
pub mod permgrp;
pub mod ratlin;
pub mod shapes;
