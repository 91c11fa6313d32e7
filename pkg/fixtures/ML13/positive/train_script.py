import torch  # expect: ML13

weights = torch.zeros(3)
