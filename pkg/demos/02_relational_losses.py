"""The three relational losses on hand-built centers and editors.

Run: python3 demos/02_relational_losses.py

Centers sit on a line; the editors move a code by a fixed step. When the step
matches the spacing every loss is zero, and the numbers show what goes wrong
as the step drifts.
"""

import numpy as np

from latentstyle import autograd as ag
from latentstyle.losses import loss_ccc, loss_cdc, loss_tam, margin


class Shift:
    def __init__(self, older, younger):
        self.older, self.younger = np.asarray(older, float), np.asarray(younger, float)

    def older_step(self, c):
        return ag.add(ag.tensor(c), self.older)

    def younger_step(self, c):
        return ag.sub(ag.tensor(c), self.younger)


N = 6
direction = np.array([1.0, 0.5])
centers = np.arange(N)[:, None] * direction

print("margins |t - j| for target t = 2:", [margin(2, j) for j in range(1, N + 1)])

print("\nstep scale  cdc(1->4)  ccc(1->4)  tam(1->4)")
for scale in (1.0, 0.9, 0.7, 0.5):
    ed = Shift(scale * direction, direction)
    edited = ed.older_step(ed.older_step(ed.older_step(centers[0])))
    print(f"  {scale:4.1f}      {loss_cdc(centers, 1, 4, ed).item():.4f}     "
          f"{loss_ccc(centers, 1, 4, ed).item():.4f}     {loss_tam(centers, edited, 1, 4).item():.4f}")

# tam only bites once the edited code is closer to a wrong center than the margin allows
print("\ntam for an edited code placed between centers 3 and 4 (target 4):")
for w in (0.0, 0.25, 0.5, 0.75, 1.0):
    code = centers[2] + w * direction
    print(f"  {w:.2f} of the way to c_4: tam = {loss_tam(centers, code, 1, 4).item():.4f}")

print("\nequal labels contribute exactly zero:", loss_cdc(centers, 3, 3, Shift(direction, direction)).item())
