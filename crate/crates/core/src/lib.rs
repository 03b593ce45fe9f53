pub mod exactlin;
pub mod groupcore;
pub mod mackey;
pub mod spinrep;
pub mod verify;
