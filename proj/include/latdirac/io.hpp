#pragma once

#include <string>

#include "latdirac/dense.hpp"
#include "latdirac/field.hpp"
#include "latdirac/spectral.hpp"

namespace latdirac {

// Field files are CSV in canonical site order with a JSON sidecar at
// <path>.json carrying the lattice descriptor.
//
//   scalar field : header n1,...,nd,re,im   sidecar {schema,d,N,h}
//   block field  : header comp,n1,...,nd,re,im  sidecar {schema,d,M,two_h}

void write_field(const std::string& path, const Field& u);
Field read_field(const std::string& path);

void write_block_field(const std::string& path, const BlockField& v);
BlockField read_block_field(const std::string& path);

// Distinguishes the two formats by sidecar contents.
bool is_block_field_file(const std::string& path);

std::string report_to_json(const EquivalenceReport& rep);

// lambda,multiplicity rows; eigenvalues within merge_tol of each other are
// reported as one multiplicity group.
void write_spectrum(const std::string& csv_path, const SpectrumResult& res,
                    double merge_tol = 1e-9);

std::string format_double(double v);

}  // namespace latdirac
