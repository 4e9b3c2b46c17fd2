#include <gtest/gtest.h>

#include "neuroforage/experiments/calibration.hpp"

using namespace neuroforage::experiments;

TEST(Calibration, RateRisesWithNoiseAmplitude) {
  DopamineDrive drive;
  double prev = -1.0;
  for (double sd : {0.0, 0.1, 0.163, 0.3, 0.6, 1.2}) {
    drive.noise_sd = sd;
    const double rate = dopamine_background_rate(drive, 100.0, 1);
    EXPECT_GE(rate, prev) << sd;
    prev = rate;
  }
  EXPECT_GT(prev, 0.8);
}

TEST(Calibration, NoDriveMeansSilence) {
  DopamineDrive drive;
  drive.constant = 0.0;
  drive.noise_sd = 0.0;
  EXPECT_EQ(dopamine_background_rate(drive, 20.0, 1), 0.0);
}

TEST(Calibration, DefaultDriveSitsNearTarget) {
  EXPECT_NEAR(dopamine_background_rate(DopamineDrive{}, 200.0, 1), 0.4, 0.15);
}

TEST(Calibration, BisectionLandsWithinTolerance) {
  const auto r = calibrate_dopamine_noise(0.4, DopamineDrive{}, 0.0, 1.0, 100.0, 3, 0.02);
  EXPECT_NEAR(r.rate_hz, 0.4, 0.02);
  EXPECT_GT(r.noise_sd, 0.0);
  EXPECT_LT(r.noise_sd, 1.0);
  DopamineDrive check;
  check.noise_sd = r.noise_sd;
  EXPECT_DOUBLE_EQ(dopamine_background_rate(check, 100.0, 3), r.rate_hz);
}

TEST(Calibration, IsDeterministic) {
  EXPECT_EQ(dopamine_background_rate(DopamineDrive{}, 30.0, 8), dopamine_background_rate(DopamineDrive{}, 30.0, 8));
}
