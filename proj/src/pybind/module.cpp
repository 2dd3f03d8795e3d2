#include <pybind11/pybind11.h>
PYBIND11_MODULE(_refltk, m) { m.doc() = "placeholder"; }
