#include <pybind11/pybind11.h>
PYBIND11_MODULE(_alcove, m) { m.doc() = "placeholder"; }
