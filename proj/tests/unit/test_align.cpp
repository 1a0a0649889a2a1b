#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/test_util.hpp"
#include "telemelody/align.hpp"
#include "telemelody/errors.hpp"

using namespace telemelody;

TEST_CASE("one-note alignment has the forced structure") {
  const AlignmentMatrix a = build_alignment(1);
  REQUIRE(a.rows() == 4);
  REQUIRE(a.cols() == 4);

  // pitch row: tonality, chord, cadence at one third each
  CHECK(a.w.at(2, 0) == doctest::Approx(1.0 / 3));
  CHECK(a.w.at(2, 1) == doctest::Approx(1.0 / 3));
  CHECK(a.w.at(2, 3) == doctest::Approx(1.0 / 3));
  // pos row: rhythm only
  CHECK(a.w.at(1, 2) == 1.0);
  // dur row: cadence only
  CHECK(a.w.at(3, 3) == 1.0);
  // bar row of the only note has no alignment
  for (int j = 0; j < 4; ++j) CHECK(a.w.at(0, j) == 0.0);

  int ones = 0;
  for (double v : a.w_hat.data) ones += v == 1.0;
  CHECK(ones == 5);
}

TEST_CASE("two-note alignment places exactly twelve ones") {
  const AlignmentMatrix a = build_alignment(2);
  REQUIRE(a.rows() == 8);
  REQUIRE(a.cols() == 7);

  int ones = 0;
  for (double v : a.w_hat.data) ones += v == 1.0;
  CHECK(ones == 12);

  // the second note's pos row splits between its rhythm and the previous
  // note's cadence
  CHECK(a.w.at(5, 5) == doctest::Approx(0.5));
  CHECK(a.w.at(5, 3) == doctest::Approx(0.5));
  // the second note's bar row aligns to the previous cadence
  CHECK(a.w.at(4, 3) == 1.0);

  // every nonzero row of w sums to one
  for (int k = 0; k < a.rows(); ++k) {
    double sum = 0;
    for (int j = 0; j < a.cols(); ++j) sum += a.w.at(k, j);
    if (sum != 0.0) CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("alignment grows linearly with the note count") {
  for (int n : {1, 2, 3, 5, 8}) {
    const AlignmentMatrix a = build_alignment(n);
    int ones = 0;
    for (double v : a.w_hat.data) ones += v == 1.0;
    CHECK(ones == 5 * n + 2 * (n - 1));
    CHECK(a.rows() == 4 * n);
    CHECK(a.cols() == 1 + 3 * n);
  }
  CHECK_THROWS_AS(build_alignment(0), InvalidSize);
}

TEST_CASE("uniform attention over one aligned row gives ln(7)/7") {
  AlignmentMatrix a;
  a.n_notes = 0;
  a.w_hat = Mat(1, 7);
  a.w = Mat(1, 7);
  for (int j : {0, 2, 5}) {
    a.w_hat.at(0, j) = 1;
    a.w.at(0, j) = 1.0 / 3;
  }
  Mat uniform(1, 7);
  for (int j = 0; j < 7; ++j) uniform.at(0, j) = 1.0 / 7;
  CHECK(attn_loss(a, uniform) ==
        doctest::Approx(std::log(7.0) / 7.0).epsilon(1e-12));
}

TEST_CASE("perfect attention on single-aligned rows scores zero") {
  AlignmentMatrix a;
  a.w_hat = Mat(2, 3);
  a.w = Mat(2, 3);
  a.w_hat.at(0, 1) = a.w.at(0, 1) = 1;
  a.w_hat.at(1, 2) = a.w.at(1, 2) = 1;
  Mat attention(2, 3);
  attention.at(0, 1) = 1;
  attention.at(1, 2) = 1;
  CHECK(attn_loss(a, attention) == 0.0);
}

TEST_CASE("an all-zero alignment contributes nothing") {
  AlignmentMatrix a;
  a.w_hat = Mat(3, 4);
  a.w = Mat(3, 4);
  Mat attention(3, 4);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) attention.at(r, c) = 0.25;
  CHECK(attn_loss(a, attention) == 0.0);
}

TEST_CASE("rows with several aligned cells cannot reach zero") {
  const AlignmentMatrix a = build_alignment(1);  // pitch row has three
  Mat attention(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) attention.at(r, c) = 0.25;
  CHECK(attn_loss(a, attention) > 0.0);
}

TEST_CASE("loss errors: shape and nonpositive attention") {
  const AlignmentMatrix a = build_alignment(1);
  CHECK_THROWS_AS(attn_loss(a, Mat(3, 3)), ShapeMismatch);
  Mat zero(4, 4);
  CHECK_THROWS_AS(attn_loss(a, zero), NonPositiveAttention);
  CHECK_THROWS_AS(attn_loss_grad(a, Mat(2, 2)), ShapeMismatch);
}

TEST_CASE("gradient matches the closed form on a single-cell row") {
  AlignmentMatrix a;
  a.w_hat = Mat(1, 4);
  a.w = Mat(1, 4);
  a.w_hat.at(0, 2) = a.w.at(0, 2) = 1;
  Mat logits(1, 4);  // uniform
  const Mat grad = attn_loss_grad(a, logits);
  // (1/(K*J)) * (A - e_j) with A uniform = 1/4
  for (int j = 0; j < 4; ++j) {
    const double expected = (0.25 - (j == 2 ? 1.0 : 0.0)) / 4.0;
    CHECK(grad.at(0, j) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("zero rows of w get zero gradient") {
  const AlignmentMatrix a = build_alignment(1);
  std::mt19937_64 rng(3);
  Mat logits(4, 4);
  for (double& v : logits.data)
    v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 4;
  const Mat grad = attn_loss_grad(a, logits);
  for (int j = 0; j < 4; ++j) CHECK(grad.at(0, j) == 0.0);  // bar row
}

TEST_CASE("analytic gradient matches central finite differences") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const AlignmentMatrix a = build_alignment(n);
    Mat logits(a.rows(), a.cols());
    for (double& v : logits.data)
      v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 6;
    const Mat grad = attn_loss_grad(a, logits);
    const Mat fd = test_util::finite_difference_grad(a, logits);
    for (std::size_t i = 0; i < grad.data.size(); ++i)
      CHECK(std::abs(grad.data[i] - fd.data[i]) < 1e-6);
  }
}

TEST_CASE("raising attention on a single-aligned row never hurts") {
  // Holds for rows with exactly one aligned cell (w = 1 there): pushing
  // mass toward that cell can only lower the cross entropy. Rows with
  // several aligned cells do not admit this guarantee, since exceeding
  // a cell's 1/T share steals mass from sibling cells.
  const AlignmentMatrix a = build_alignment(2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Mat logits(a.rows(), a.cols());
    for (double& v : logits.data)
      v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 4;
    Mat attention = row_softmax(logits);
    const double before = attn_loss(a, attention);

    const int dur_row = 3;  // aligned only to its cadence column
    const int cad_col = 3;
    REQUIRE(a.w.at(dur_row, cad_col) == 1.0);
    const double delta = 0.5;
    for (int j = 0; j < a.cols(); ++j) {
      const double bumped =
          attention.at(dur_row, j) + (j == cad_col ? delta : 0.0);
      attention.at(dur_row, j) = bumped / (1.0 + delta);
    }
    CHECK(attn_loss(a, attention) <= before + 1e-12);
  }

  // the gradient direction is a descent direction for the whole matrix
  Mat logits(a.rows(), a.cols());
  for (double& v : logits.data)
    v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 4;
  const double before = attn_loss(a, row_softmax(logits));
  const Mat grad = attn_loss_grad(a, logits);
  Mat stepped = logits;
  for (std::size_t i = 0; i < stepped.data.size(); ++i)
    stepped.data[i] -= 0.1 * grad.data[i];
  CHECK(attn_loss(a, row_softmax(stepped)) <= before + 1e-12);
}

TEST_CASE("total loss composes with the weight") {
  AlignmentMatrix a;
  a.w_hat = Mat(1, 7);
  a.w = Mat(1, 7);
  for (int j : {0, 2, 5}) {
    a.w_hat.at(0, j) = 1;
    a.w.at(0, j) = 1.0 / 3;
  }
  Mat uniform(1, 7);
  for (int j = 0; j < 7; ++j) uniform.at(0, j) = 1.0 / 7;

  const LossBreakdown zero_weight = total_loss(2.0, a, uniform, 0.0);
  CHECK(zero_weight.total == 2.0);

  const LossBreakdown dflt = total_loss(2.0, a, uniform, 0.05);
  CHECK(dflt.l_attn == doctest::Approx(0.277987).epsilon(1e-5));
  CHECK(dflt.total == doctest::Approx(2.0139).epsilon(1e-4));
  CHECK(dflt.total == dflt.l_nll + dflt.lambda_attn * dflt.l_attn);

  CHECK_THROWS_AS(total_loss(2.0, a, uniform, -0.1), Error);
}

TEST_CASE("text dump is stable") {
  const std::string dump = alignment_text_dump(build_alignment(1));
  CHECK(dump ==
        "0 0 0 0\n"
        "0 0 1 0\n"
        "1 1 0 1\n"
        "0 0 0 1\n"
        "\n"
        "0.000000 0.000000 0.000000 0.000000\n"
        "0.000000 0.000000 1.000000 0.000000\n"
        "0.333333 0.333333 0.000000 0.333333\n"
        "0.000000 0.000000 0.000000 1.000000\n");
}
