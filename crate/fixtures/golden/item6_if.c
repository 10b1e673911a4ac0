int j, zPend;

int main(void)
{
  if (j == 0) {
    zPend = 1;
  } else {
    zPend = 0;
  }
  return 0;
}
