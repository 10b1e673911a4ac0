extern int getv(void);
int r;

void use(int (*f)(void))
{
  r = 1;
}

int main(void)
{
  use(getv);
  return 0;
}
