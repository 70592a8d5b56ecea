// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "interp/error.hpp"
#include "interp/io.hpp"

using namespace interp;

TEST(OperatorSpec, CompactForm) {
  const auto s = io::parse_operator_spec("qlaplace:q=3, n=64");
  EXPECT_EQ(s.kind, "qlaplace");
  EXPECT_EQ(s.params.at("q"), "3");
  EXPECT_EQ(s.params.at("n"), "64");
  const auto e = io::parse_operator_spec("energy:abs,dim=2");
  EXPECT_EQ(e.params.at("type"), "abs");
}

TEST(OperatorSpec, JsonForm) {
  const auto s = io::parse_operator_spec(R"({"kind": "scalar", "params": {"a": 2.5}})");
  EXPECT_EQ(s.kind, "scalar");
  const auto b = io::build_operator(s);
  EXPECT_EQ(b.op->id(), "scalar(a=2.5)");
  EXPECT_THROW(io::parse_operator_spec(R"({"params": {}})"), ParameterError);
}

TEST(OperatorSpec, BuildsEveryKind) {
  EXPECT_EQ(io::build_operator(io::parse_operator_spec("qlaplace:q=3,n=10")).op->space().dim(), 10);
  const auto e = io::build_operator(io::parse_operator_spec("energy:box,dim=2,lo=-2,hi=1"));
  ASSERT_TRUE(e.energy);
  EXPECT_EQ(e.op->space().dim(), 2);
  const auto sh = io::build_operator(io::parse_operator_spec("scalar:a=1,shift=0.25"));
  EXPECT_DOUBLE_EQ(sh.op->omega(), 0.25);
  const auto pe = io::build_operator(io::parse_operator_spec("scalar:a=1,perturb=0.5"));
  EXPECT_DOUBLE_EQ(pe.op->omega(), 0.5);
  EXPECT_THROW(io::build_operator(io::parse_operator_spec("nonsense")), ParameterError);
  EXPECT_THROW(io::build_operator(io::parse_operator_spec("scalar:a=x")), ParameterError);
  EXPECT_THROW(io::build_operator(io::parse_operator_spec("qlaplace:n=0")), ParameterError);
}

TEST(OperatorSpec, MatrixFromCsv) {
  const auto path = std::filesystem::temp_directory_path() / "interplab_matrix_test.csv";
  {
    std::ofstream out(path);
    out << "# symmetric\n2,-1\n-1,2\n";
  }
  const auto b = io::build_operator(io::parse_operator_spec("matrix:file=" + path.string()));
  EXPECT_EQ(b.op->space().dim(), 2);
  Vector x(2);
  x << 1.0, 0.0;
  EXPECT_NEAR(b.op->set_norm(x), std::sqrt(5.0), 1e-15);
  std::filesystem::remove(path);
}

TEST(SpaceParsing, AllForms) {
  const auto s = io::parse_space("theta=0.25,p=3");
  EXPECT_EQ(s, SpaceSpec::weighted_lp(0.25, 3.0));
  EXPECT_EQ(io::parse_space(R"({"theta": 0.5, "p": 2})"), SpaceSpec::weighted_lp(0.5, 2.0));
  EXPECT_EQ(io::parse_space("l1"), SpaceSpec::l1());
  EXPECT_EQ(io::parse_space("linf"), SpaceSpec::linf());
  EXPECT_THROW(io::parse_space("theta=1.5"), ParameterError);
  EXPECT_THROW(io::parse_space("gamma=1"), ParameterError);
  EXPECT_EQ(io::space_json(SpaceSpec::weighted_lp(0.5, 2.0)), R"({"kind":"WeightedLp","p":2.0,"theta":0.5})");
  EXPECT_EQ(io::space_json(SpaceSpec::linf()), R"({"kind":"Linf","p":null,"theta":null})");
  for (const auto& s : {SpaceSpec::weighted_lp(0.3, 3.0), SpaceSpec::l1(), SpaceSpec::l1_cap_linf()})
    EXPECT_EQ(io::parse_space(io::space_json(s)), s);
}

TEST(Csv, GridFunctionAndTrajectory) {
  const LogGrid g(1.0, 4.0, 3);
  const std::string csv = io::grid_function_csv(GridFunction(g, {1.0, 0.5, 0.25}), "k_over_t");
  EXPECT_EQ(csv, "t,k_over_t\n1,1\n2,0.5\n4,0.25\n");
  const std::string inf = io::grid_function_csv(
      GridFunction(g, {std::numeric_limits<double>::infinity(), 1.0, 0.0}), "v");
  EXPECT_EQ(inf, "t,v\n1,inf\n2,1\n4,0\n");
  const auto tr = evolve(*scalar_operator(1.0), Vector::Ones(1), 1.0, 2);
  EXPECT_EQ(io::trajectory_csv(tr), "t,u_0\n0,1\n0.5,0.6666666666666666\n1,0.4444444444444444\n");
  EXPECT_NE(io::trajectory_json(tr).find("\"schema_version\": 1"), std::string::npos);
}

TEST(Vectors, Parse) {
  const Vector v = io::parse_vector("1, -2.5,3e-1");
  ASSERT_EQ(v.size(), 3);
  EXPECT_DOUBLE_EQ(v[2], 0.3);
  EXPECT_THROW(io::parse_vector("1,,2"), ParameterError);
}
