/** The 17-point verbal judgment scale mapped to integers -8..8. */

export interface ScalePoint {
  value: number;
  label: string;
}

const INTENSITIES: Record<number, string> = {
  1: "Weakly",
  2: "Moderately",
  3: "Moderately to strongly",
  4: "Strongly",
  5: "Strongly to very strongly",
  6: "Very strongly",
  7: "Very strongly to extremely",
  8: "Extremely",
};

function labelFor(value: number): string {
  if (value === 0) {
    return "Equal to";
  }
  const intensity = INTENSITIES[Math.abs(value)];
  if (intensity === undefined) {
    return value.toString();
  }
  return value < 0 ? `${intensity} less important than` : `${intensity} more important than`;
}

/** Integer judgment steps from -kappa to +kappa with verbal labels. */
export function scalePoints(kappa = 8): ScalePoint[] {
  const bound = Math.floor(kappa);
  const points: ScalePoint[] = [];
  for (let value = -bound; value <= bound; value += 1) {
    points.push({ value, label: labelFor(value) });
  }
  return points;
}

/** Whether a keyboard-entered value is on the scale for this kappa. */
export function isOnScale(value: number, kappa = 8): boolean {
  return Number.isInteger(value) && Math.abs(value) <= kappa;
}
