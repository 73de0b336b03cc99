namespace qjet {}
