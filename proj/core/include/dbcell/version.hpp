#ifndef DBCELL_VERSION_HPP
#define DBCELL_VERSION_HPP

#define DBCELL_VERSION "0.1.0"

#endif
